// Copyright 2026 The quasirep Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quasirep/error.hpp"

namespace quasirep {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotAGroup: return "NotAGroup";
    case ErrorCode::kClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorCode::kUnsupportedParameter: return "UnsupportedParameter";
    case ErrorCode::kOrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::kDecompositionFailed: return "DecompositionFailed";
    case ErrorCode::kToleranceViolation: return "ToleranceViolation";
    case ErrorCode::kIncompleteTable: return "IncompleteTable";
    case ErrorCode::kMissingIrrepTable: return "MissingIrrepTable";
    case ErrorCode::kDimensionError: return "DimensionError";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kOddOrder: return "OddOrder";
    case ErrorCode::kNotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::kDegenerateDimension: return "DegenerateDimension";
    case ErrorCode::kIllConditionedGram: return "IllConditionedGram";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace quasirep
