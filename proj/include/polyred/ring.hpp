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

#include <cstdint>
#include <string>

#include "polyred/integer.hpp"

namespace polyred {

enum class RingKind { kIntegers, kPrimeField };

// Coefficient domain: the integers, or GF(q) for a prime q < 2^64.
class RingSpec {
 public:
  RingSpec() = default;  // integers

  static RingSpec integers() { return RingSpec(); }
  // Throws NotPrime unless q is prime.
  static RingSpec prime_field(std::uint64_t q);

  RingKind kind() const noexcept { return kind_; }
  bool is_field() const noexcept { return kind_ == RingKind::kPrimeField; }
  // 0 for the integers.
  std::uint64_t modulus() const noexcept { return modulus_; }

  // Canonical representative: identity over the integers, [0, q) over GF(q).
  Integer canonical(const Integer& c) const;
  Integer add(const Integer& a, const Integer& b) const;
  Integer mul(const Integer& a, const Integer& b) const;
  bool is_zero(const Integer& c) const;

  std::string to_string() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  RingKind kind_ = RingKind::kIntegers;
  std::uint64_t modulus_ = 0;
};

void require_same_ring(const RingSpec& a, const RingSpec& b);

}  // namespace polyred
