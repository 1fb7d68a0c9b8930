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
namespace {

// Predicted degree of the CRT step on (x_i, x_j) for the current pair.
CrtEstimate estimate(const detail::Working& wf, const detail::Working& wg, std::size_t i,
                     std::size_t j, const Integer& d_i, const Integer& d_j, OpCounts& ops) {
  CrtEstimate e;
  e.offset_f = wf.max_diff(j, i);
  e.offset_g = wg.max_diff(j, i);
  Integer spread = e.offset_f + e.offset_g + wf.max_diff(i, j) + wg.max_diff(i, j);
  Integer from_i = d_i + 1;
  Integer from_j = d_j + 2 + e.offset_f + e.offset_g;
  e.base = from_i > from_j ? from_i : from_j;
  e.estimate = spread * e.base;
  ops.add += 2 * (wf.size() + wg.size()) + 6;
  ops.mul += 1;
  return e;
}

void crt_step(detail::Working& w, std::size_t i, std::size_t j, const Integer& offset,
              const Integer& base, OpCounts& ops) {
  for (std::size_t t = 0; t < w.size(); ++t) {
    Integer& ki = w.at(t, i);
    Integer& kj = w.at(t, j);
    ki += (offset + kj - ki) * base;
    kj = 0;
  }
  ops.mul += w.size();
  ops.add += 3 * w.size();
}

}  // namespace

CrtEstimate d_crt_estimate(const MultiPoly& f, const MultiPoly& g, std::size_t i, std::size_t j) {
  detail::check_pair(f, g);
  if (i < 1 || j < 1 || i > f.nvars() || j > f.nvars() || i == j) {
    raise(ErrorKind::kIndexOutOfRange, "variable pair (" + std::to_string(i) + ", " +
                                           std::to_string(j) + ")");
  }
  detail::Working wf(f), wg(g);
  OpCounts ops;
  Integer d_i = wf.max_of(i) + wg.max_of(i);
  Integer d_j = wf.max_of(j) + wg.max_of(j);
  return estimate(wf, wg, i, j, d_i, d_j, ops);
}

ReductionOutcome hybrid_reduce(const MultiPoly& f, const MultiPoly& g) {
  detail::check_pair(f, g);
  const std::size_t n = f.nvars();
  detail::Working wf(f), wg(g);
  HybridPlan plan{n, {}};
  OpCounts ops;
  constexpr std::size_t i = 1;
  for (std::size_t r = 2; r <= n; ++r) {
    const std::size_t j = r;
    Integer d_i = wf.max_of(i) + wg.max_of(i);
    Integer d_j = wf.max_of(j) + wg.max_of(j);
    ops.add += 2;
    CrtEstimate e = estimate(wf, wg, i, j, d_i, d_j, ops);
    HybridStep step;
    step.round = r;
    step.var_i = i;
    step.var_j = j;
    // Ties go to the IKS branch.
    if (e.estimate < d_i * d_j) {
      step.branch = HybridBranch::kCrt;
      crt_step(wf, i, j, e.offset_f, e.base, ops);
      crt_step(wg, i, j, e.offset_g, e.base, ops);
      step.base = std::move(e.base);
      step.offset_f = std::move(e.offset_f);
      step.offset_g = std::move(e.offset_g);
    } else {
      step.branch = HybridBranch::kIks;
      step.base = d_i + 1;
      detail::substitute(wf, j, i, step.base, ops);
      detail::substitute(wg, j, i, step.base, ops);
    }
    ops.mul += 1;
    plan.steps.push_back(std::move(step));
  }
  return {Method::kHybrid, wf.to_unipoly(1), wg.to_unipoly(1), std::move(plan), ops};
}

MultiPoly hybrid_inverse(const UniPoly& h, const HybridPlan& plan) {
  const std::size_t n = plan.nvars;
  if (n == 0) raise(ErrorKind::kPlanFormat, "hybrid plan without variables");
  TermList terms(h.ring(), n);
  std::vector<Integer> e(n);
  std::vector<Exponent> k(n);
  for (const auto& t : h.terms()) {
    std::fill(e.begin(), e.end(), Integer(0));
    e[0] = t.exponent;
    for (auto it = plan.steps.rbegin(); it != plan.steps.rend(); ++it) {
      Integer& ki = e[it->var_i - 1];
      Integer& kj = e[it->var_j - 1];
      auto [q, rem] = detail::divmod(ki, it->base);
      ki = std::move(rem);
      if (it->branch == HybridBranch::kIks) {
        kj = std::move(q);
      } else {
        kj = q - (it->offset_f + it->offset_g) + ki;
        if (kj < 0) {
          raise(ErrorKind::kNegativeExponent,
                "x^" + t.exponent.str() + " recovers a negative exponent on x" +
                    std::to_string(it->var_j) + " in round " + std::to_string(it->round));
        }
      }
    }
    for (std::size_t v = 0; v < n; ++v) k[v] = to_exponent(e[v]);
    terms.push(k, t.coeff);
  }
  return normalize(std::move(terms));
}

}  // namespace polyred
