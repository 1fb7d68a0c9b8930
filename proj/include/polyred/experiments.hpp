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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polyred/multipoly.hpp"
#include "polyred/ring.hpp"

namespace polyred {

using Rational = boost::multiprecision::cpp_rational;

// Random pair generation for the degree-ratio experiments. The same
// configuration is used for f and for g (with different RNG streams).
struct GenConfig {
  std::size_t nvars = 4;
  std::size_t terms = 10'000;        // monomials drawn before merging
  std::vector<Exponent> degrees;     // per-variable degree, length nvars, each >= 1
  std::optional<Exponent> diff_bound;  // L: |k_1 - k_2| <= L (partially random only)
  std::uint64_t seed = 1;
  RingSpec ring;
};

// `terms` monomials with k_i uniform on [0, d_i] and uniform nonzero
// coefficients, plus one monomial per variable with k_i = d_i so that every
// per-variable degree is attained exactly.
MultiPoly gen_fully_random(const GenConfig& cfg);

// As above, but k_2 uniform on [0, d_2] and k_1 uniform on
// [max(0, k_2 - L), min(d_1, k_2 + L)]. The forced x_1 maximum uses
// k_2 = max(0, d_1 - L), the forced x_2 maximum k_1 = max(0, d_2 - L).
// Throws InfeasibleConstraint when |d_1 - d_2| > L.
MultiPoly gen_partially_random(const GenConfig& cfg);

// prod (d_i + 1) / (d_n * B^(n-1)) with B = max d_i + 1; d are degrees of f*g.
Rational predict_ratio_iks(std::span<const Integer> d_h);

// (4L(d_2 + 2L + 2) + 1) * prod_{i>=3} (d_i + 1) / (d_n * B^(n-1)); needs n >= 3.
Rational predict_ratio_hybrid_crt(std::span<const Integer> d_h, const Integer& L);

// Whether the first hybrid round is expected to take the CRT branch when
// every Max_f/Max_g difference on (x_1, x_2) equals L.
bool predict_crt_branch(std::span<const Integer> d_h, const Integer& L);

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  Integer d_sks, d_iks, d_hr;
  std::optional<Integer> d_crt;
  double ratio_iks = 0, ratio_hr = 0;
  bool hr_first_round_crt = false;
};

struct RatioReport {
  std::vector<Exponent> degrees;  // per-polynomial degree tuple
  std::optional<Exponent> diff_bound;
  std::size_t terms = 0;
  std::uint64_t seed = 0;
  std::vector<TrialRecord> trials;  // ordered by trial index
  double mean_ratio_iks = 0, mean_ratio_hr = 0;
  double pred_iks = 0, pred_hr = 0;

  bool crt_in_every_trial() const;
  bool ratios_identical_per_trial() const;
};

struct ExperimentConfig {
  std::vector<Exponent> degrees;
  std::optional<Exponent> diff_bound;
  std::size_t terms = 10'000;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  RingSpec ring;
  bool include_crt = false;
};

// Seed of trial `index` (f and g draw from two streams derived from it).
std::uint64_t trial_seed(std::uint64_t seed, std::size_t index);

RatioReport run_trials(const ExperimentConfig& cfg);

// Fully random case, one report per tuple.
std::vector<RatioReport> run_table3(const std::vector<std::vector<Exponent>>& tuples,
                                    std::size_t terms, std::size_t trials, std::uint64_t seed,
                                    const RingSpec& ring = {});

// Partially random case, one report per L.
std::vector<RatioReport> run_fig1_sweep(const std::vector<Exponent>& tuple,
                                        std::span<const Exponent> bounds, std::size_t terms,
                                        std::size_t trials, std::uint64_t seed,
                                        const RingSpec& ring = {});

// Header: n,d1..dn,L,T,trial,seed,d_sks,d_iks,d_hr,ratio_iks,ratio_hr,pred_iks,pred_hr
std::string to_csv(std::span<const RatioReport> reports);
std::string to_json(std::span<const RatioReport> reports);

}  // namespace polyred
