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
#include <vector>

#include "polyred/integer.hpp"
#include "polyred/ring.hpp"

namespace polyred {

struct UniTerm {
  Integer exponent;  // non-negative, unbounded
  Integer coeff;

  friend bool operator==(const UniTerm&, const UniTerm&) = default;
};

class UniPoly;

// Unnormalized univariate terms.
struct UniTermList {
  explicit UniTermList(RingSpec ring_in) : ring(ring_in) {}

  void push(Integer exponent, Integer coeff);

  RingSpec ring;
  std::vector<UniTerm> terms;
};

// Sparse univariate polynomial; terms sorted by strictly decreasing exponent,
// no zero coefficients.
class UniPoly {
 public:
  explicit UniPoly(RingSpec ring) : ring_(ring) {}

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<UniTerm>& terms() const noexcept { return terms_; }
  const UniTerm& term(std::size_t i) const { return terms_[i]; }

  UniDegree degree() const {
    return is_zero() ? UniDegree::neg_infinity() : UniDegree(terms_.front().exponent);
  }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  friend UniPoly normalize(UniTermList terms);

  RingSpec ring_;
  std::vector<UniTerm> terms_;
};

UniPoly normalize(UniTermList terms);

UniPoly add(const UniPoly& a, const UniPoly& b);

}  // namespace polyred
