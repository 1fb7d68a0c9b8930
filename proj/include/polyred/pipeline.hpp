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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyred/multipoly.hpp"
#include "polyred/reduce.hpp"
#include "polyred/unimul.hpp"

namespace polyred {

// The three-step multiplication: reduce (f, g) to (f_x, g_x), multiply the
// univariate images, recover f*g. kDirect skips the reduction entirely.
enum class MulMethod { kSks, kIks, kCrt, kHybrid, kDirect };

std::string_view mul_method_name(MulMethod m);
MulMethod parse_mul_method(std::string_view name);  // throws InvalidArgument

struct MulOptions {
  std::optional<std::vector<Integer>> crt_bases;
  BackendChoice backend;
};

struct MulStats {
  MulMethod method = MulMethod::kDirect;
  std::optional<Backend> backend;  // resolved; empty for kDirect
  // Image degrees; empty for kDirect. d_hx == d_fx + d_gx.
  std::optional<Integer> d_fx, d_gx, d_hx;
  std::size_t terms_f = 0, terms_g = 0, terms_h = 0;
  std::size_t terms_fx = 0, terms_gx = 0, terms_hx = 0;
  // Reduction phase only.
  OpCounts ops;
  double reduce_seconds = 0, multiply_seconds = 0, recover_seconds = 0;

  // Flat key=value view, in a fixed key order.
  std::vector<std::pair<std::string, std::string>> to_record() const;
};

struct MulResult {
  MultiPoly h;
  MulStats stats;
};

MulResult multiply(const MultiPoly& f, const MultiPoly& g, MulMethod method,
                   const MulOptions& options = {});

struct Divergence {
  std::size_t position = 0;         // index in canonical order
  std::optional<std::string> expected;  // the term, or empty if `actual` has extra terms
  std::optional<std::string> actual;
};

struct VerifyReport {
  bool ok = false;
  std::optional<Divergence> divergence;
  std::string message;  // set when a step failed with an error
};

// First difference between two polynomials in canonical term order.
std::optional<Divergence> first_divergence(const MultiPoly& expected, const MultiPoly& actual);

// Runs `multiply` and compares against mul_direct. Never throws.
VerifyReport verify(const MultiPoly& f, const MultiPoly& g, MulMethod method,
                    const MulOptions& options = {});

// Multiplies the outcome's images, recovers with its plan (which may have
// been altered), and compares against mul_direct. Never throws.
VerifyReport verify_outcome(const MultiPoly& f, const MultiPoly& g, const ReductionOutcome& outcome,
                            const BackendChoice& backend = {});

std::string format_term(const MultiPoly& p, std::size_t term);

}  // namespace polyred
