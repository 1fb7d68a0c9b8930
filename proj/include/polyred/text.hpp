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
#include <string>
#include <string_view>

#include "polyred/multipoly.hpp"
#include "polyred/unipoly.hpp"

namespace polyred {

// Text format, ASCII, whitespace-insensitive between tokens:
//
//   poly   := term (('+' | '-') term)*        e.g. "3*x1^2*x3 - x2 + 7"
//   term   := coeff ('*' factor)* | ['-'] factor ('*' factor)*
//   factor := 'x' INDEX ('^' EXP)?            (univariate: 'x' ('^' EXP)?)
//
// Repeated factors multiply. Output is canonical: explicit '*', no "^1",
// no unit coefficient, terms in descending order.

// Throws SyntaxError, UnknownVariable, ExponentOverflow.
MultiPoly parse_poly(std::string_view text, std::size_t nvars, const RingSpec& ring);
std::string format_poly(const MultiPoly& p);

UniPoly parse_unipoly(std::string_view text, const RingSpec& ring);
std::string format_unipoly(const UniPoly& p);

}  // namespace polyred
