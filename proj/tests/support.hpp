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

// Random instances shared by the unit tests and the acceptance binary.

#include <cstdint>
#include <random>
#include <vector>

#include "polyred/multipoly.hpp"
#include "polyred/unipoly.hpp"

namespace polyred::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(gen_);
  }
  std::int64_t signed_uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
  }
  bool coin() { return uniform(0, 1) == 1; }

  // Nonzero in the ring; occasionally wide over the integers.
  Integer coeff(const RingSpec& ring, bool wide = true) {
    if (ring.is_field()) return Integer(uniform(1, ring.modulus() - 1));
    Integer c = signed_uniform(-1000, 1000);
    if (wide && uniform(0, 9) == 0) c = c * (Integer(1) << 90) + signed_uniform(-5, 5);
    return c == 0 ? Integer(1) : c;
  }

 private:
  std::mt19937_64 gen_;
};

inline const RingSpec& test_field() {
  static const RingSpec f = RingSpec::prime_field(1000003);
  return f;
}

// Nonzero polynomial with exponents in [0, box[v]] and up to `max_terms` draws.
inline MultiPoly random_poly(Rng& rng, const std::vector<Exponent>& box, std::size_t max_terms,
                             const RingSpec& ring) {
  for (;;) {
    TermList t(ring, box.size());
    std::vector<Exponent> k(box.size());
    std::size_t terms = rng.uniform(1, max_terms);
    for (std::size_t i = 0; i < terms; ++i) {
      for (std::size_t v = 0; v < box.size(); ++v) k[v] = rng.uniform(0, box[v]);
      t.push(k, rng.coeff(ring));
    }
    MultiPoly p = normalize(std::move(t));
    if (!p.is_zero()) return p;
  }
}

inline std::vector<Exponent> random_box(Rng& rng, std::size_t nvars, Exponent max_deg) {
  std::vector<Exponent> box(nvars);
  for (auto& d : box) d = rng.uniform(0, max_deg);
  return box;
}

// Roughly 15/16 of the exponents present; `wide` allows ~2^100 coefficients.
inline UniPoly random_dense(Rng& rng, std::uint64_t degree, const RingSpec& ring, bool wide) {
  UniTermList t(ring);
  for (std::uint64_t e = 0; e <= degree; ++e) {
    if (e == degree || rng.uniform(0, 15) != 0) t.push(Integer(e), rng.coeff(ring, wide));
  }
  return normalize(std::move(t));
}

}  // namespace polyred::testing
