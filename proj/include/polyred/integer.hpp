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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "polyred/error.hpp"

namespace polyred {

// Unbounded signed integer used for coefficients and for every exponent
// produced by a reduction (those grow like base^n).
using Integer = boost::multiprecision::cpp_int;

// Exponent of one variable in a multivariate monomial.
using Exponent = std::uint64_t;

Exponent checked_add(Exponent a, Exponent b);

// Least non-negative residue of a modulo m (m > 0).
Integer mod_floor(const Integer& a, const Integer& m);

Integer gcd(const Integer& a, const Integer& b);

std::string to_string(const Integer& v);

// Throws ExponentOverflow when v does not fit.
Exponent to_exponent(const Integer& v);

std::optional<std::uint64_t> fits_u64(const Integer& v);

// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Degree of a polynomial: a non-negative value, or the distinguished
// negative infinity of the zero polynomial. No arithmetic is defined on it.
template <typename T>
class BasicDegree {
 public:
  explicit BasicDegree(T value) : value_(std::move(value)) {}

  static BasicDegree neg_infinity() { return BasicDegree(); }

  bool is_neg_infinity() const noexcept { return !value_.has_value(); }

  const T& value() const {
    if (!value_) raise(ErrorKind::kEmptyPolynomial, "degree of the zero polynomial");
    return *value_;
  }

  friend bool operator==(const BasicDegree&, const BasicDegree&) = default;

  friend bool operator==(const BasicDegree& d, const T& v) {
    return d.value_.has_value() && *d.value_ == v;
  }

 private:
  BasicDegree() = default;
  std::optional<T> value_;
};

using Degree = BasicDegree<Exponent>;
using UniDegree = BasicDegree<Integer>;

}  // namespace polyred
