// Copyright 2026 The nashcell Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nashcell/errors.h"

namespace nashcell {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidDistribution: return "InvalidDistribution";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNegativeEpsilon: return "NegativeEpsilon";
    case ErrorCode::kEmptySupport: return "EmptySupport";
    case ErrorCode::kParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::kResolutionZero: return "ResolutionZero";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kNoPreEquilibriumFound: return "NoPreEquilibriumFound";
    case ErrorCode::kNotSinglePlayer: return "NotSinglePlayer";
    case ErrorCode::kNotTwoPlayer: return "NotTwoPlayer";
    case ErrorCode::kModeMismatch: return "ModeMismatch";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kShapeError: return "ShapeError";
    case ErrorCode::kValueError: return "ValueError";
  }
  return "Unknown";
}

}  // namespace nashcell
