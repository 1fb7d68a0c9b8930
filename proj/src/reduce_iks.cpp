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
#include <functional>
#include <set>
#include <string>

#include "reduce_internal.hpp"

namespace polyred {
namespace {

void validate_sequence(std::size_t nvars, std::span<const Substitution> seq) {
  if (seq.size() + 1 != nvars) {
    raise(ErrorKind::kInvalidSequence, "expected " + std::to_string(nvars - 1) +
                                           " substitutions, got " + std::to_string(seq.size()));
  }
  std::vector<bool> live(nvars + 1, true);
  for (const auto& s : seq) {
    bool ok = s.from >= 1 && s.from <= nvars && s.to >= 1 && s.to <= nvars && s.from != s.to &&
              live[s.from] && live[s.to];
    if (!ok) {
      raise(ErrorKind::kInvalidSequence,
            "x" + std::to_string(s.from) + " -> x" + std::to_string(s.to) + " is not allowed here");
    }
    live[s.from] = false;
  }
}

}  // namespace

std::vector<Substitution> iks_sequence(std::size_t nvars) {
  std::vector<Substitution> seq;
  for (std::size_t r = 2; r <= nvars; ++r) seq.push_back({r, 1});
  return seq;
}

bool is_straight_pattern(std::span<const Substitution> seq) {
  return std::all_of(seq.begin(), seq.end(),
                     [&](const Substitution& s) { return s.to == seq.front().to; });
}

ReductionOutcome iks_reduce(const MultiPoly& f, const MultiPoly& g) {
  detail::check_pair(f, g);
  const std::size_t n = f.nvars();
  detail::Working wf(f), wg(g);
  IksPlan plan;
  plan.exponents.emplace_back(1);
  OpCounts ops;
  for (std::size_t r = 2; r <= n; ++r) {
    Integer d = wf.max_of(1) + wg.max_of(1) + 1;
    ops.add += 2;
    detail::substitute(wf, r, 1, d, ops);
    detail::substitute(wg, r, 1, d, ops);
    plan.exponents.push_back(std::move(d));
  }
  return {Method::kIks, wf.to_unipoly(1), wg.to_unipoly(1), std::move(plan), ops};
}

MultiPoly iks_inverse(const UniPoly& h, const IksPlan& plan) {
  const std::size_t n = plan.exponents.size();
  if (n == 0) raise(ErrorKind::kPlanFormat, "IKS plan without exponents");
  TermList terms(h.ring(), n);
  std::vector<Exponent> k(n);
  for (const auto& t : h.terms()) {
    Integer rest = t.exponent;
    for (std::size_t v = n; v >= 2; --v) {
      auto [quot, rem] = detail::divmod(rest, plan.exponents[v - 1]);
      k[v - 1] = to_exponent(quot);
      rest = std::move(rem);
    }
    k[0] = to_exponent(rest);
    terms.push(k, t.coeff);
  }
  return normalize(std::move(terms));
}

DegreeBounds iks_bounds(const MultiPoly& f, const MultiPoly& g) {
  detail::check_pair(f, g);
  DegreeBounds b{1, 1};
  for (const auto& d : detail::product_degrees(f, g)) {
    b.lower *= d;
    b.upper *= d + 1;
  }
  return b;
}

ReductionOutcome apply_sequence(const MultiPoly& f, const MultiPoly& g,
                                std::span<const Substitution> seq) {
  detail::check_pair(f, g);
  const std::size_t n = f.nvars();
  validate_sequence(n, seq);
  detail::Working wf(f), wg(g);
  SequencePlan plan{n, {}};
  OpCounts ops;
  for (const auto& s : seq) {
    Integer d = wf.max_of(s.to) + wg.max_of(s.to) + 1;
    ops.add += 2;
    detail::substitute(wf, s.from, s.to, d, ops);
    detail::substitute(wg, s.from, s.to, d, ops);
    plan.steps.push_back({s, std::move(d)});
  }
  const std::size_t last = seq.empty() ? 1 : seq.back().to;
  return {Method::kSequence, wf.to_unipoly(last), wg.to_unipoly(last), std::move(plan), ops};
}

MultiPoly sequence_inverse(const UniPoly& h, const SequencePlan& plan) {
  const std::size_t n = plan.nvars;
  if (n == 0) raise(ErrorKind::kPlanFormat, "sequence plan without variables");
  std::vector<Substitution> seq;
  for (const auto& s : plan.steps) seq.push_back(s.sub);
  validate_sequence(n, seq);
  const std::size_t last = seq.empty() ? 1 : seq.back().to;
  TermList terms(h.ring(), n);
  std::vector<Integer> e(n);
  std::vector<Exponent> k(n);
  for (const auto& t : h.terms()) {
    std::fill(e.begin(), e.end(), Integer(0));
    e[last - 1] = t.exponent;
    for (auto it = plan.steps.rbegin(); it != plan.steps.rend(); ++it) {
      Integer& target = e[it->sub.to - 1];
      auto [quot, rem] = detail::divmod(target, it->exponent);
      target = std::move(rem);
      e[it->sub.from - 1] = std::move(quot);
    }
    for (std::size_t v = 0; v < n; ++v) k[v] = to_exponent(e[v]);
    terms.push(k, t.coeff);
  }
  return normalize(std::move(terms));
}

std::vector<std::vector<Substitution>> all_sequences(std::size_t nvars) {
  std::vector<std::vector<Substitution>> out;
  std::vector<Substitution> current;
  std::vector<bool> live(nvars + 1, true);
  std::function<void()> extend = [&] {
    if (current.size() + 1 >= nvars) {
      out.push_back(current);
      return;
    }
    for (std::size_t from = 1; from <= nvars; ++from) {
      if (!live[from]) continue;
      for (std::size_t to = 1; to <= nvars; ++to) {
        if (to == from || !live[to]) continue;
        live[from] = false;
        current.push_back({from, to});
        extend();
        current.pop_back();
        live[from] = true;
      }
    }
  };
  if (nvars >= 1) extend();
  return out;
}

SequenceSearch find_optimal_sequence(const MultiPoly& f, const MultiPoly& g,
                                     std::size_t max_nvars) {
  detail::check_pair(f, g);
  if (f.nvars() > max_nvars) {
    raise(ErrorKind::kTooManyVariables, std::to_string(f.nvars()) + " variables exceed the limit " +
                                            std::to_string(max_nvars));
  }
  SequenceSearch best;
  bool have_any = false, have_straight = false;
  for (const auto& seq : all_sequences(f.nvars())) {
    Integer d = apply_sequence(f, g, seq).product_degree();
    ++best.evaluated;
    if (!have_any || d < best.product_degree) {
      best.sequence = seq;
      best.product_degree = d;
      have_any = true;
    }
    if (is_straight_pattern(seq) && (!have_straight || d < best.best_straight_degree)) {
      best.best_straight_degree = d;
      have_straight = true;
    }
  }
  return best;
}

}  // namespace polyred
