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

#include "polyred/reduce.hpp"

namespace polyred::detail {

// Mutable copy of a polynomial's exponents as unbounded integers, used while
// variables are being eliminated. Coefficients stay with the source.
class Working {
 public:
  explicit Working(const MultiPoly& src);

  std::size_t size() const noexcept { return src_->size(); }
  std::size_t nvars() const noexcept { return nvars_; }

  Integer& at(std::size_t term, std::size_t var) { return exps_[term * nvars_ + var - 1]; }
  const Integer& at(std::size_t term, std::size_t var) const {
    return exps_[term * nvars_ + var - 1];
  }

  Integer max_of(std::size_t var) const;
  // max over terms of at(j) - at(i)
  Integer max_diff(std::size_t i, std::size_t j) const;

  UniPoly to_unipoly(std::size_t var) const;

 private:
  const MultiPoly* src_;
  std::size_t nvars_;
  std::vector<Integer> exps_;
};

// Same ring, same arity, both nonzero.
void check_pair(const MultiPoly& f, const MultiPoly& g);

// deg_v(f) + deg_v(g) for v = 1..n.
std::vector<Integer> product_degrees(const MultiPoly& f, const MultiPoly& g);

// Quotient and remainder for non-negative a, positive b.
struct DivMod {
  Integer quot;
  Integer rem;
};
DivMod divmod(const Integer& a, const Integer& b);

// x_from -> x_to^exponent on one working polynomial.
void substitute(Working& w, std::size_t from, std::size_t to, const Integer& exponent,
                OpCounts& ops);

}  // namespace polyred::detail
