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

#include "polyred/error.hpp"

namespace polyred {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kEmptyPolynomial: return "EmptyPolynomial";
    case ErrorKind::kRingMismatch: return "RingMismatch";
    case ErrorKind::kArityMismatch: return "ArityMismatch";
    case ErrorKind::kSyntaxError: return "SyntaxError";
    case ErrorKind::kExponentOverflow: return "ExponentOverflow";
    case ErrorKind::kUnknownVariable: return "UnknownVariable";
    case ErrorKind::kExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorKind::kInvalidSequence: return "InvalidSequence";
    case ErrorKind::kTooManyVariables: return "TooManyVariables";
    case ErrorKind::kBasesNotCoprime: return "BasesNotCoprime";
    case ErrorKind::kBasesTooSmall: return "BasesTooSmall";
    case ErrorKind::kNotInvertible: return "NotInvertible";
    case ErrorKind::kNegativeExponent: return "NegativeExponent";
    case ErrorKind::kDegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::kCoefficientTooLarge: return "CoefficientTooLarge";
    case ErrorKind::kInfeasibleConstraint: return "InfeasibleConstraint";
    case ErrorKind::kNotPrime: return "NotPrime";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kPlanFormat: return "PlanFormat";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

SyntaxError::SyntaxError(std::size_t offset, const std::string& what)
    : Error(ErrorKind::kSyntaxError, what + " at offset " + std::to_string(offset)),
      offset_(offset) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace polyred
