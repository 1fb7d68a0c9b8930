// Copyright 2026 The polyred Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>

#include "reduce_internal.hpp"

namespace polyred {

std::vector<Integer> adjust_coprime(std::span<const Integer> initial) {
  std::vector<Integer> out(initial.begin(), initial.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (;;) {
      bool coprime = true;
      for (std::size_t j = 0; j < i && coprime; ++j) coprime = gcd(out[i], out[j]) == 1;
      if (coprime) break;
      ++out[i];
    }
  }
  return out;
}

Integer modinv(const Integer& a, const Integer& m, std::uint64_t& steps) {
  if (m < 2) raise(ErrorKind::kInvalidArgument, "modulus " + m.str() + " is below 2");
  Integer r0 = m, r1 = mod_floor(a, m);
  Integer s0 = 0, s1 = 1;
  while (r1 != 0) {
    Integer q, r;
    boost::multiprecision::divide_qr(r0, r1, q, r);
    ++steps;
    r0 = std::move(r1);
    r1 = std::move(r);
    Integer s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0 != 1) {
    raise(ErrorKind::kNotInvertible, a.str() + " has no inverse modulo " + m.str());
  }
  return mod_floor(s0, m);
}

Integer modinv(const Integer& a, const Integer& m) {
  std::uint64_t steps = 0;
  return modinv(a, m, steps);
}

namespace {

CrtPlan make_plan_counted(std::vector<Integer> bases, OpCounts& ops) {
  for (const auto& p : bases) {
    if (p < 2) raise(ErrorKind::kBasesTooSmall, "CRT base " + p.str() + " is below 2");
  }
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (gcd(bases[i], bases[j]) != 1) {
        raise(ErrorKind::kBasesNotCoprime,
              "bases " + bases[j].str() + " and " + bases[i].str() + " share a factor");
      }
    }
  }
  CrtPlan plan;
  plan.product = 1;
  for (const auto& p : bases) plan.product *= p;
  ops.mul += bases.size();
  for (const auto& p : bases) {
    plan.cofactors.push_back(plan.product / p);
    std::uint64_t steps = 0;
    plan.inverses.push_back(modinv(plan.cofactors.back(), p, steps));
    ops.mul += 1 + steps;
  }
  plan.bases = std::move(bases);
  return plan;
}

}  // namespace

CrtPlan make_crt_plan(std::vector<Integer> bases) {
  OpCounts ops;
  return make_plan_counted(std::move(bases), ops);
}

ReductionOutcome crt_reduce(const MultiPoly& f, const MultiPoly& g,
                            std::optional<std::vector<Integer>> bases) {
  detail::check_pair(f, g);
  const std::size_t n = f.nvars();
  auto d = detail::product_degrees(f, g);
  if (bases) {
    if (bases->size() != n) {
      raise(ErrorKind::kInvalidArgument,
            std::to_string(bases->size()) + " CRT bases for " + std::to_string(n) + " variables");
    }
    for (std::size_t v = 0; v < n; ++v) {
      if ((*bases)[v] <= d[v]) {
        raise(ErrorKind::kBasesTooSmall, "base " + (*bases)[v].str() + " for x" +
                                             std::to_string(v + 1) + " must exceed degree " +
                                             d[v].str());
      }
    }
  } else {
    std::vector<Integer> initial;
    for (const auto& dv : d) initial.push_back(dv + 1 < 2 ? Integer(2) : dv + 1);
    bases = adjust_coprime(initial);
  }

  OpCounts ops;
  CrtPlan plan = make_plan_counted(std::move(*bases), ops);
  std::vector<Integer> weights;
  for (std::size_t v = 0; v < n; ++v) weights.push_back(plan.cofactors[v] * plan.inverses[v]);
  ops.mul += n;

  auto image = [&](const MultiPoly& p) {
    UniTermList list(p.ring());
    list.terms.reserve(p.size());
    for (std::size_t t = 0; t < p.size(); ++t) {
      auto k = p.exponents(t);
      Integer e = 0;
      for (std::size_t v = 0; v < n; ++v) e += weights[v] * k[v];
      list.push(e % plan.product, p.coeff(t));
    }
    ops.mul += p.size() * (n + 1);
    ops.add += p.size() * n;
    return normalize(std::move(list));
  };
  UniPoly fx = image(f);
  UniPoly gx = image(g);
  return {Method::kCrt, std::move(fx), std::move(gx), std::move(plan), ops};
}

MultiPoly crt_inverse(const UniPoly& h, const CrtPlan& plan) {
  const std::size_t n = plan.bases.size();
  if (n == 0) raise(ErrorKind::kPlanFormat, "CRT plan without bases");
  TermList terms(h.ring(), n);
  std::vector<Exponent> k(n);
  for (const auto& t : h.terms()) {
    for (std::size_t v = 0; v < n; ++v) k[v] = to_exponent(t.exponent % plan.bases[v]);
    terms.push(k, t.coeff);
  }
  return normalize(std::move(terms));
}

}  // namespace polyred
