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

#include <string>
#include <string_view>

#include "polyred/reduce.hpp"

namespace polyred {

// One-line text record: method tag, n, then the plan's parameters in
// declaration order, all decimal. Examples:
//
//   sks n=3 base=52
//   iks n=3 exponents=1,16,256
//   crt n=3 bases=17,31,52 product=27404 cofactors=1612,884,527 inverses=11,2,15
//   hybrid n=3 steps=2:1:2:crt:17:0:0;3:1:3:iks:155
//   sequence n=3 steps=2>1:16;3>1:256
std::string serialize_plan(const Plan& plan);

// Throws PlanFormat on malformed or internally inconsistent records.
Plan parse_plan(std::string_view text);

std::string_view method_name(Method m);
// Accepts sks, iks, crt, hybrid, sequence. Throws InvalidArgument.
Method parse_method(std::string_view name);

}  // namespace polyred
