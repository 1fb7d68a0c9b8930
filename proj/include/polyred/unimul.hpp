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
#include <span>

#include "polyred/unipoly.hpp"

namespace polyred {

enum class Backend { kSparseSchoolbook, kDenseNtt, kAuto };

struct BackendChoice {
  Backend kind = Backend::kAuto;
  // Largest deg(a) + deg(b) (exclusive) admitted to the dense path.
  std::uint64_t dense_threshold = std::uint64_t{1} << 22;
};

// Primes c * 2^k + 1 (k >= 23, p < 2^31) with a primitive root, largest first.
struct NttPrime {
  std::uint64_t modulus;
  std::uint64_t primitive_root;
  unsigned two_adicity;
};
std::span<const NttPrime> ntt_primes();

// Term-by-term product. Exact in both rings.
UniPoly mul_sparse(const UniPoly& a, const UniPoly& b);

// Dense convolution over as many NTT primes as the coefficient bound needs,
// recombined by CRT (signed for the integers, then reduced mod q for GF(q)).
// Throws DegreeTooLarge when deg(a) + deg(b) >= dense_threshold and
// CoefficientTooLarge when all primes together cannot hold the result.
UniPoly mul_ntt(const UniPoly& a, const UniPoly& b, const BackendChoice& choice = {});

// 2 * max|a_i| * max|b_j| * min(#a, #b); coefficients of GF(q) elements are
// taken in [0, q).
Integer ntt_coefficient_bound(const UniPoly& a, const UniPoly& b);
// Number of leading entries of ntt_primes() whose product exceeds `bound`,
// or 0 if even all of them do not.
std::size_t ntt_primes_needed(const Integer& bound);

// Resolves kAuto: dense when deg(a) + deg(b) < dense_threshold, both inputs
// have more than one term per 64 exponents, and the coefficient bound fits;
// sparse otherwise. Explicit choices are returned unchanged.
Backend choose_backend(const UniPoly& a, const UniPoly& b, const BackendChoice& choice);

UniPoly multiply(const UniPoly& a, const UniPoly& b, const BackendChoice& choice = {});

}  // namespace polyred
