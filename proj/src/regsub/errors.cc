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

#include "regsub/errors.h"

namespace regsub {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid_argument";
    case ErrorCode::kDimensionMismatch:
      return "dimension_mismatch";
    case ErrorCode::kNotSubmodular:
      return "not_submodular";
    case ErrorCode::kNegativeValue:
      return "negative_value";
    case ErrorCode::kNonTargetFunction:
      return "non_target_function";
    case ErrorCode::kNotAMatroid:
      return "not_a_matroid";
    case ErrorCode::kGroundSetTooLarge:
      return "ground_set_too_large";
    case ErrorCode::kNotInPolytope:
      return "not_in_polytope";
    case ErrorCode::kUnsupportedMatroidKind:
      return "unsupported_matroid_kind";
    case ErrorCode::kEpsilonOutOfRange:
      return "epsilon_out_of_range";
    case ErrorCode::kInvalidK:
      return "invalid_k";
    case ErrorCode::kSchemaViolation:
      return "schema_violation";
    case ErrorCode::kIo:
      return "io_error";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace regsub
