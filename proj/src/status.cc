/*
 * Copyright 2026 The rankcompat Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "rankcompat/status.h"

namespace rankcompat {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSingleClass: return "SingleClass";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kOriginalAllWrong: return "OriginalAllWrong";
    case ErrorCode::kOriginalNoCorrectPairs: return "OriginalNoCorrectPairs";
    case ErrorCode::kNoOrderedPairs: return "NoOrderedPairs";
    case ErrorCode::kOutOfRegime: return "OutOfRegime";
    case ErrorCode::kNonFiniteScore: return "NonFiniteScore";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kMissingOriginal: return "MissingOriginal";
    case ErrorCode::kSpecTooLarge: return "SpecTooLarge";
    case ErrorCode::kEmptyCandidates: return "EmptyCandidates";
    case ErrorCode::kTooFewReplications: return "TooFewReplications";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kInfeasibleCounts: return "InfeasibleCounts";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

bool IsNumericError(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSingleClass:
    case ErrorCode::kOriginalAllWrong:
    case ErrorCode::kOriginalNoCorrectPairs:
    case ErrorCode::kNoOrderedPairs:
    case ErrorCode::kOutOfRegime:
    case ErrorCode::kNonFiniteScore:
    case ErrorCode::kInfeasibleCounts:
      return true;
    default:
      return false;
  }
}

}  // namespace rankcompat
