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

#include <algorithm>

#include "reduce_internal.hpp"

namespace polyred {

Integer sks_base(const MultiPoly& f, const MultiPoly& g) {
  detail::check_pair(f, g);
  auto d = detail::product_degrees(f, g);
  // A constant product would give base 1, which is not a positional base.
  return std::max<Integer>(*std::max_element(d.begin(), d.end()) + 1, 2);
}

DegreeBounds sks_bounds(const MultiPoly& f, const MultiPoly& g) {
  Integer base = sks_base(f, g);
  auto d = detail::product_degrees(f, g);
  const auto n = static_cast<unsigned>(d.size());
  return {d.back() * boost::multiprecision::pow(base, n - 1),
          boost::multiprecision::pow(base, n) - 1};
}

ReductionOutcome sks_reduce(const MultiPoly& f, const MultiPoly& g) {
  SksPlan plan{f.nvars(), sks_base(f, g)};
  const std::size_t n = f.nvars();
  OpCounts ops;
  std::vector<Integer> powers{1};
  for (std::size_t v = 1; v < n; ++v) powers.push_back(powers.back() * plan.base);
  ops.mul += n - 1;

  auto image = [&](const MultiPoly& p) {
    UniTermList list(p.ring());
    list.terms.reserve(p.size());
    for (std::size_t t = 0; t < p.size(); ++t) {
      auto k = p.exponents(t);
      Integer e = k[0];
      for (std::size_t v = 1; v < n; ++v) e += k[v] * powers[v];
      list.push(std::move(e), p.coeff(t));
    }
    ops.mul += p.size() * (n - 1);
    ops.add += p.size() * (n - 1);
    return normalize(std::move(list));
  };
  UniPoly fx = image(f);
  UniPoly gx = image(g);
  return {Method::kSks, std::move(fx), std::move(gx), std::move(plan), ops};
}

MultiPoly sks_inverse(const UniPoly& h, const SksPlan& plan) {
  if (plan.base < 2) raise(ErrorKind::kPlanFormat, "SKS base must be at least 2");
  const std::size_t n = plan.nvars;
  const Integer limit = boost::multiprecision::pow(plan.base, static_cast<unsigned>(n));
  TermList terms(h.ring(), n);
  std::vector<Exponent> k(n);
  for (const auto& t : h.terms()) {
    if (t.exponent >= limit) {
      raise(ErrorKind::kExponentOutOfRange,
            "x^" + t.exponent.str() + " is outside [0, " + limit.str() + ")");
    }
    Integer rest = t.exponent;
    for (std::size_t v = 0; v < n; ++v) {
      auto [quot, digit] = detail::divmod(rest, plan.base);
      k[v] = to_exponent(digit);
      rest = std::move(quot);
    }
    terms.push(k, t.coeff);
  }
  return normalize(std::move(terms));
}

}  // namespace polyred
