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

#include "polyred/multipoly.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

namespace polyred {
namespace {

void require_compatible(const MultiPoly& f, const MultiPoly& g) {
  require_same_ring(f.ring(), g.ring());
  if (f.nvars() != g.nvars()) {
    raise(ErrorKind::kArityMismatch,
          std::to_string(f.nvars()) + " vs " + std::to_string(g.nvars()) + " variables");
  }
}

void require_var(const MultiPoly& f, std::size_t var) {
  if (var < 1 || var > f.nvars()) {
    raise(ErrorKind::kIndexOutOfRange,
          "variable x" + std::to_string(var) + " with " + std::to_string(f.nvars()) + " variables");
  }
}

}  // namespace

TermList::TermList(RingSpec ring_in, std::size_t nvars_in) : ring(ring_in), nvars(nvars_in) {
  if (nvars == 0) raise(ErrorKind::kInvalidArgument, "polynomials need at least one variable");
}

void TermList::push(std::span<const Exponent> exps, Integer coeff) {
  if (exps.size() != nvars) {
    raise(ErrorKind::kArityMismatch, "exponent vector of length " + std::to_string(exps.size()));
  }
  exponents.insert(exponents.end(), exps.begin(), exps.end());
  coeffs.push_back(std::move(coeff));
}

MultiPoly::MultiPoly(RingSpec ring, std::size_t nvars) : ring_(ring), nvars_(nvars) {
  if (nvars == 0) raise(ErrorKind::kInvalidArgument, "polynomials need at least one variable");
}

int compare_exponents(std::span<const Exponent> a, std::span<const Exponent> b) {
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
  }
  return 0;
}

MultiPoly normalize(TermList terms) {
  const std::size_t n = terms.nvars;
  auto row = [&](std::size_t t) {
    return std::span<const Exponent>(terms.exponents.data() + t * n, n);
  };
  std::vector<std::size_t> order(terms.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto before = [&](std::size_t a, std::size_t b) { return compare_exponents(row(a), row(b)) < 0; };
  if (!std::is_sorted(order.begin(), order.end(), before)) {
    // When every column fits its own bit field of one word, sort packed keys.
    std::vector<unsigned> width(n, 0);
    for (std::size_t i = 0; i < terms.exponents.size(); ++i) {
      width[i % n] = std::max<unsigned>(width[i % n], std::bit_width(terms.exponents[i]));
    }
    if (std::accumulate(width.begin(), width.end(), 0u) <= 64) {
      std::vector<std::pair<std::uint64_t, std::size_t>> keyed(terms.size());
      for (std::size_t t = 0; t < terms.size(); ++t) {
        std::uint64_t key = 0;
        auto r = row(t);
        for (std::size_t v = 0; v < n; ++v) {
          if (width[v] == 0) continue;
          key = (width[v] == 64 ? 0 : key << width[v]) | r[v];
        }
        keyed[t] = {key, t};
      }
      std::sort(keyed.begin(), keyed.end(),
                [](const auto& a, const auto& b) { return a.first > b.first; });
      for (std::size_t t = 0; t < terms.size(); ++t) order[t] = keyed[t].second;
    } else {
      std::sort(order.begin(), order.end(), before);
    }
  }

  MultiPoly out(terms.ring, n);
  for (std::size_t k = 0; k < order.size();) {
    Integer sum = std::move(terms.coeffs[order[k]]);
    std::size_t end = k + 1;
    for (; end < order.size() && compare_exponents(row(order[k]), row(order[end])) == 0; ++end) {
      sum += terms.coeffs[order[end]];
    }
    if (terms.ring.is_field() && (sum < 0 || sum >= terms.ring.modulus())) {
      sum = terms.ring.canonical(sum);
    }
    if (sum != 0) {
      auto r = row(order[k]);
      out.exps_.insert(out.exps_.end(), r.begin(), r.end());
      out.coeffs_.push_back(std::move(sum));
    }
    k = end;
  }
  return out;
}

Degree deg_var(const MultiPoly& f, std::size_t var) {
  require_var(f, var);
  if (f.is_zero()) return Degree::neg_infinity();
  Exponent best = 0;
  for (std::size_t t = 0; t < f.size(); ++t) best = std::max(best, f.exponents(t)[var - 1]);
  return Degree(best);
}

Integer max_diff(const MultiPoly& f, std::size_t i, std::size_t j) {
  require_var(f, i);
  require_var(f, j);
  if (i == j) raise(ErrorKind::kInvalidArgument, "max_diff needs two distinct variables");
  if (f.is_zero()) raise(ErrorKind::kEmptyPolynomial, "max_diff of the zero polynomial");
  Integer best;
  for (std::size_t t = 0; t < f.size(); ++t) {
    auto e = f.exponents(t);
    Integer d = Integer(e[j - 1]) - Integer(e[i - 1]);
    if (t == 0 || d > best) best = d;
  }
  return best;
}

MultiPoly add(const MultiPoly& f, const MultiPoly& g) {
  require_compatible(f, g);
  TermList terms(f.ring(), f.nvars());
  for (const MultiPoly* p : {&f, &g}) {
    for (std::size_t t = 0; t < p->size(); ++t) terms.push(p->exponents(t), p->coeff(t));
  }
  return normalize(std::move(terms));
}

MultiPoly negate(const MultiPoly& f) {
  TermList terms(f.ring(), f.nvars());
  for (std::size_t t = 0; t < f.size(); ++t) terms.push(f.exponents(t), -f.coeff(t));
  return normalize(std::move(terms));
}

MultiPoly mul_direct(const MultiPoly& f, const MultiPoly& g) {
  require_compatible(f, g);
  const std::size_t n = f.nvars();
  TermList terms(f.ring(), n);
  terms.exponents.reserve(f.size() * g.size() * n);
  terms.coeffs.reserve(f.size() * g.size());
  std::vector<Exponent> e(n);
  for (std::size_t a = 0; a < f.size(); ++a) {
    auto ea = f.exponents(a);
    for (std::size_t b = 0; b < g.size(); ++b) {
      auto eb = g.exponents(b);
      for (std::size_t v = 0; v < n; ++v) e[v] = checked_add(ea[v], eb[v]);
      terms.push(e, f.coeff(a) * g.coeff(b));
    }
  }
  return normalize(std::move(terms));
}

}  // namespace polyred
