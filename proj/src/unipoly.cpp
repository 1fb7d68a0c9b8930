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

#include "polyred/unipoly.hpp"

#include <algorithm>

namespace polyred {

void UniTermList::push(Integer exponent, Integer coeff) {
  if (exponent < 0) raise(ErrorKind::kNegativeExponent, "univariate exponent " + exponent.str());
  terms.push_back({std::move(exponent), std::move(coeff)});
}

UniPoly normalize(UniTermList list) {
  auto& terms = list.terms;
  auto descending = [](const UniTerm& a, const UniTerm& b) { return a.exponent > b.exponent; };
  // Products and inverses usually arrive in order already.
  if (!std::is_sorted(terms.begin(), terms.end(), descending)) {
    std::sort(terms.begin(), terms.end(), descending);
  }
  UniPoly out(list.ring);
  for (std::size_t k = 0; k < terms.size();) {
    Integer sum = std::move(terms[k].coeff);
    std::size_t end = k + 1;
    for (; end < terms.size() && terms[end].exponent == terms[k].exponent; ++end) {
      sum += terms[end].coeff;
    }
    if (list.ring.is_field() && (sum < 0 || sum >= list.ring.modulus())) {
      sum = list.ring.canonical(sum);
    }
    if (sum != 0) out.terms_.push_back({std::move(terms[k].exponent), std::move(sum)});
    k = end;
  }
  return out;
}

UniPoly add(const UniPoly& a, const UniPoly& b) {
  require_same_ring(a.ring(), b.ring());
  UniTermList list(a.ring());
  list.terms = a.terms();
  list.terms.insert(list.terms.end(), b.terms().begin(), b.terms().end());
  return normalize(std::move(list));
}

}  // namespace polyred
