// Copyright 2026 The rsplfr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rsplfr/error.h"

namespace rsplfr {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnsupportedCardinality: return "UnsupportedCardinality";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kFieldTooSmall: return "FieldTooSmall";
    case ErrorCode::kNotMds: return "NotMds";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kSingularSubmatrix: return "SingularSubmatrix";
    case ErrorCode::kMalformedArray: return "MalformedArray";
    case ErrorCode::kUnequalStarCounts: return "UnequalStarCounts";
    case ErrorCode::kSymbolGap: return "SymbolGap";
    case ErrorCode::kConditionA: return "ConditionA";
    case ErrorCode::kConditionB: return "ConditionB";
    case ErrorCode::kConfigInvalid: return "ConfigInvalid";
    case ErrorCode::kDemandInvalid: return "DemandInvalid";
    case ErrorCode::kMissingQuery: return "MissingQuery";
    case ErrorCode::kInsufficientServers: return "InsufficientServers";
    case ErrorCode::kDecodeInconsistency: return "DecodeInconsistency";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kUnknownAdversary: return "UnknownAdversary";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace rsplfr
