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

#include "gpmc/error.hpp"

namespace gpmc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOverlappingParts: return "OverlappingParts";
    case ErrorCode::kUncoveredElement: return "UncoveredElement";
    case ErrorCode::kNonPositiveCap: return "NonPositiveCap";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kEmptyPart: return "EmptyPart";
    case ErrorCode::kElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::kEdgeIndexOutOfRange: return "EdgeIndexOutOfRange";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kIsolatedVertex: return "IsolatedVertex";
    case ErrorCode::kMalformedInstance: return "MalformedInstance";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidPartial: return "InvalidPartial";
    case ErrorCode::kAlreadyCovered: return "AlreadyCovered";
    case ErrorCode::kIncompleteColoring: return "IncompleteColoring";
    case ErrorCode::kListTooShort: return "ListTooShort";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kInternalInfeasible: return "InternalInfeasible";
    case ErrorCode::kNoKernelFound: return "NoKernelFound";
    case ErrorCode::kInternalInvariantViolated:
      return "InternalInvariantViolated";
  }
  return "Unknown";
}

bool is_internal(ErrorCode code) {
  return code == ErrorCode::kInternalInfeasible ||
         code == ErrorCode::kNoKernelFound ||
         code == ErrorCode::kInternalInvariantViolated;
}

}  // namespace gpmc
