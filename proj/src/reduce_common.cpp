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
#include <type_traits>

#include "reduce_internal.hpp"

namespace polyred {
namespace detail {

Working::Working(const MultiPoly& src) : src_(&src), nvars_(src.nvars()) {
  exps_.reserve(src.size() * nvars_);
  for (std::size_t t = 0; t < src.size(); ++t) {
    for (Exponent e : src.exponents(t)) exps_.emplace_back(e);
  }
}

Integer Working::max_of(std::size_t var) const {
  Integer best = at(0, var);
  for (std::size_t t = 1; t < size(); ++t) {
    if (at(t, var) > best) best = at(t, var);
  }
  return best;
}

Integer Working::max_diff(std::size_t i, std::size_t j) const {
  Integer best = at(0, j) - at(0, i);
  for (std::size_t t = 1; t < size(); ++t) {
    Integer d = at(t, j) - at(t, i);
    if (d > best) best = std::move(d);
  }
  return best;
}

UniPoly Working::to_unipoly(std::size_t var) const {
  UniTermList list(src_->ring());
  list.terms.reserve(size());
  for (std::size_t t = 0; t < size(); ++t) list.push(at(t, var), src_->coeff(t));
  return normalize(std::move(list));
}

void check_pair(const MultiPoly& f, const MultiPoly& g) {
  require_same_ring(f.ring(), g.ring());
  if (f.nvars() != g.nvars()) {
    raise(ErrorKind::kArityMismatch,
          std::to_string(f.nvars()) + " vs " + std::to_string(g.nvars()) + " variables");
  }
  if (f.is_zero() || g.is_zero()) {
    raise(ErrorKind::kEmptyPolynomial, "reductions need nonzero operands");
  }
}

std::vector<Integer> product_degrees(const MultiPoly& f, const MultiPoly& g) {
  std::vector<Integer> d;
  d.reserve(f.nvars());
  for (std::size_t v = 1; v <= f.nvars(); ++v) {
    d.emplace_back(Integer(deg_var(f, v).value()) + Integer(deg_var(g, v).value()));
  }
  return d;
}

DivMod divmod(const Integer& a, const Integer& b) {
  DivMod out;
  if (a.sign() >= 0 && b.sign() > 0 && a.backend().size() == 1 && b.backend().size() == 1) {
    const auto x = static_cast<std::uint64_t>(a), y = static_cast<std::uint64_t>(b);
    out.quot = x / y;
    out.rem = x % y;
    return out;
  }
  boost::multiprecision::divide_qr(a, b, out.quot, out.rem);
  return out;
}

void substitute(Working& w, std::size_t from, std::size_t to, const Integer& exponent,
                OpCounts& ops) {
  for (std::size_t t = 0; t < w.size(); ++t) {
    w.at(t, to) += w.at(t, from) * exponent;
    w.at(t, from) = 0;
  }
  ops.mul += w.size();
  ops.add += w.size();
}

}  // namespace detail

Method plan_method(const Plan& plan) {
  return std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SksPlan>) return Method::kSks;
        else if constexpr (std::is_same_v<T, IksPlan>) return Method::kIks;
        else if constexpr (std::is_same_v<T, CrtPlan>) return Method::kCrt;
        else if constexpr (std::is_same_v<T, HybridPlan>) return Method::kHybrid;
        else return Method::kSequence;
      },
      plan);
}

std::size_t plan_nvars(const Plan& plan) {
  return std::visit(
      [](const auto& p) -> std::size_t {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, IksPlan>) return p.exponents.size();
        else if constexpr (std::is_same_v<T, CrtPlan>) return p.bases.size();
        else return p.nvars;
      },
      plan);
}

Integer ReductionOutcome::product_degree() const {
  return f_x.degree().value() + g_x.degree().value();
}

ReductionOutcome reduce(const MultiPoly& f, const MultiPoly& g, Method method,
                        const ReduceOptions& options) {
  switch (method) {
    case Method::kSks: return sks_reduce(f, g);
    case Method::kIks: return iks_reduce(f, g);
    case Method::kCrt: return crt_reduce(f, g, options.crt_bases);
    case Method::kHybrid: return hybrid_reduce(f, g);
    case Method::kSequence: return apply_sequence(f, g, options.sequence);
  }
  raise(ErrorKind::kInvalidArgument, "unknown reduction method");
}

MultiPoly recover(const UniPoly& h, const Plan& plan, const RingSpec& ring) {
  require_same_ring(h.ring(), ring);
  return std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SksPlan>) return sks_inverse(h, p);
        else if constexpr (std::is_same_v<T, IksPlan>) return iks_inverse(h, p);
        else if constexpr (std::is_same_v<T, CrtPlan>) return crt_inverse(h, p);
        else if constexpr (std::is_same_v<T, HybridPlan>) return hybrid_inverse(h, p);
        else return sequence_inverse(h, p);
      },
      plan);
}

Integer image_exponent(const Plan& plan, std::span<const Exponent> k, ImageRole role) {
  if (k.size() != plan_nvars(plan)) {
    raise(ErrorKind::kArityMismatch, "exponent vector does not match the plan");
  }
  std::vector<Integer> e(k.begin(), k.end());
  return std::visit(
      [&](const auto& p) -> Integer {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SksPlan>) {
          Integer out = 0, power = 1;
          for (const auto& v : e) {
            out += v * power;
            power *= p.base;
          }
          return out;
        } else if constexpr (std::is_same_v<T, IksPlan>) {
          Integer out = 0;
          for (std::size_t v = 0; v < e.size(); ++v) out += e[v] * p.exponents[v];
          return out;
        } else if constexpr (std::is_same_v<T, CrtPlan>) {
          Integer out = 0;
          for (std::size_t v = 0; v < e.size(); ++v) out += p.cofactors[v] * p.inverses[v] * e[v];
          return out % p.product;
        } else if constexpr (std::is_same_v<T, SequencePlan>) {
          std::size_t last = 0;
          for (const auto& s : p.steps) {
            e[s.sub.to - 1] += e[s.sub.from - 1] * s.exponent;
            e[s.sub.from - 1] = 0;
            last = s.sub.to - 1;
          }
          return e[last];
        } else {
          for (const auto& s : p.steps) {
            Integer& ki = e[s.var_i - 1];
            Integer& kj = e[s.var_j - 1];
            if (s.branch == HybridBranch::kIks) {
              ki += kj * s.base;
            } else {
              Integer offset = role == ImageRole::kF   ? s.offset_f
                               : role == ImageRole::kG ? s.offset_g
                                                       : s.offset_f + s.offset_g;
              ki = (offset + kj - ki) * s.base + ki;
            }
            kj = 0;
          }
          return e[0];
        }
      },
      plan);
}

}  // namespace polyred
