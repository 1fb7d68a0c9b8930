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
#include <span>
#include <vector>

#include "polyred/integer.hpp"
#include "polyred/ring.hpp"

namespace polyred {

class MultiPoly;

// Unnormalized bag of terms; duplicates and zero coefficients allowed.
// `normalize` turns it into a MultiPoly.
struct TermList {
  TermList(RingSpec ring, std::size_t nvars);

  void push(std::span<const Exponent> exponents, Integer coeff);
  std::size_t size() const noexcept { return coeffs.size(); }

  RingSpec ring;
  std::size_t nvars;
  std::vector<Exponent> exponents;  // row-major, size() * nvars
  std::vector<Integer> coeffs;
};

// Sparse multivariate polynomial in canonical form: like terms merged,
// no zero coefficients, terms sorted by descending lexicographic order of
// their exponent vectors. Instances are immutable.
class MultiPoly {
 public:
  // The zero polynomial.
  MultiPoly(RingSpec ring, std::size_t nvars);

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  std::span<const Exponent> exponents(std::size_t term) const {
    return {exps_.data() + term * nvars_, nvars_};
  }
  const Integer& coeff(std::size_t term) const { return coeffs_[term]; }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  friend MultiPoly normalize(TermList terms);

  RingSpec ring_;
  std::size_t nvars_;
  std::vector<Exponent> exps_;
  std::vector<Integer> coeffs_;
};

// Merge like terms, drop zeros, sort descending-lex.
MultiPoly normalize(TermList terms);

// Variable indices are 1-based throughout, x1..xn.
Degree deg_var(const MultiPoly& f, std::size_t var);

// max over terms of (k_j - k_i). Throws EmptyPolynomial on zero input.
Integer max_diff(const MultiPoly& f, std::size_t i, std::size_t j);

MultiPoly add(const MultiPoly& f, const MultiPoly& g);
MultiPoly negate(const MultiPoly& f);

// Schoolbook term-by-term product; the reference every reduction is checked against.
MultiPoly mul_direct(const MultiPoly& f, const MultiPoly& g);

// Descending-lex comparison of two exponent vectors of equal length.
int compare_exponents(std::span<const Exponent> a, std::span<const Exponent> b);

}  // namespace polyred
