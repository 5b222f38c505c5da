// Copyright 2026 The luceopt Authors
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

#include "luceopt/error.hpp"

namespace luceopt {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCycle: return "CycleError";
    case ErrorCode::kIdOutOfRange: return "IdOutOfRange";
    case ErrorCode::kNonPositiveInput: return "NonPositiveInput";
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kInfeasibleNetwork: return "InfeasibleNetwork";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kWeightOrder: return "WeightOrderError";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kNotAttractivenessCorrelated:
      return "NotAttractivenessCorrelated";
    case ErrorCode::kNegativeArgument: return "NegativeArgument";
    case ErrorCode::kZeroOutsideOption: return "ZeroOutsideOption";
    case ErrorCode::kBadGroupSizes: return "BadGroupSizes";
    case ErrorCode::kNoFeasibleCandidate: return "NoFeasibleCandidate";
    case ErrorCode::kProblemTooLarge: return "ProblemTooLarge";
    case ErrorCode::kIo: return "IoError";
  }
  return "Error";
}

}  // namespace luceopt
