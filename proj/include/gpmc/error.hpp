// Copyright 2026 The Authors.
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

#ifndef GPMC_ERROR_HPP_
#define GPMC_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpmc {

enum class ErrorCode {
  // Matroid construction.
  kOverlappingParts,
  kUncoveredElement,
  kNonPositiveCap,
  kLengthMismatch,
  kEmptyPart,
  // Argument validation.
  kElementOutOfRange,
  kEdgeIndexOutOfRange,
  kVertexOutOfRange,
  kIsolatedVertex,
  kMalformedInstance,
  kInvalidArgument,
  // Coloring and kernels.
  kInvalidPartial,
  kAlreadyCovered,
  kIncompleteColoring,
  kListTooShort,
  kInstanceTooLarge,
  // Internal invariant violations. Any of these is a bug.
  kInternalInfeasible,
  kNoKernelFound,
  kInternalInvariantViolated,
};

std::string_view error_code_name(ErrorCode code);

// True for the codes that can only be raised by a broken implementation.
bool is_internal(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " +
                           message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gpmc

#endif  // GPMC_ERROR_HPP_
