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

#ifndef QUASIREP_ERROR_HPP
#define QUASIREP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace quasirep {

enum class ErrorCode {
  kNotAGroup,
  kClosureCapExceeded,
  kUnsupportedParameter,
  kOrderCapExceeded,
  kDecompositionFailed,
  kToleranceViolation,
  kIncompleteTable,
  kMissingIrrepTable,
  kDimensionError,
  kRankDeficient,
  kOddOrder,
  kNotAHomomorphism,
  kDegenerateDimension,
  kIllConditionedGram,
  kParseError,
  kIoError,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// Single exception type thrown by the library; `code()` says which failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace quasirep

#endif  // QUASIREP_ERROR_HPP
