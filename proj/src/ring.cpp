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

#include "polyred/ring.hpp"

namespace polyred {

RingSpec RingSpec::prime_field(std::uint64_t q) {
  if (!is_prime_u64(q)) raise(ErrorKind::kNotPrime, std::to_string(q) + " is not prime");
  RingSpec r;
  r.kind_ = RingKind::kPrimeField;
  r.modulus_ = q;
  return r;
}

Integer RingSpec::canonical(const Integer& c) const {
  if (!is_field()) return c;
  return mod_floor(c, Integer(modulus_));
}

Integer RingSpec::add(const Integer& a, const Integer& b) const {
  return canonical(a + b);
}

Integer RingSpec::mul(const Integer& a, const Integer& b) const {
  return canonical(a * b);
}

bool RingSpec::is_zero(const Integer& c) const { return canonical(c) == 0; }

std::string RingSpec::to_string() const {
  if (!is_field()) return "ZZ";
  return "GF(" + std::to_string(modulus_) + ")";
}

void require_same_ring(const RingSpec& a, const RingSpec& b) {
  if (!(a == b)) raise(ErrorKind::kRingMismatch, a.to_string() + " vs " + b.to_string());
}

}  // namespace polyred
