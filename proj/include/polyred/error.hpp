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
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyred {

enum class ErrorKind {
  kIndexOutOfRange,
  kEmptyPolynomial,
  kRingMismatch,
  kArityMismatch,
  kSyntaxError,
  kExponentOverflow,
  kUnknownVariable,
  kExponentOutOfRange,
  kInvalidSequence,
  kTooManyVariables,
  kBasesNotCoprime,
  kBasesTooSmall,
  kNotInvertible,
  kNegativeExponent,
  kDegreeTooLarge,
  kCoefficientTooLarge,
  kInfeasibleConstraint,
  kNotPrime,
  kInvalidArgument,
  kPlanFormat,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type; `kind()` is stable
// and is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what);

  // Byte offset into the parsed text where the problem was detected.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace polyred
