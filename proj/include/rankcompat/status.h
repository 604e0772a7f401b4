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

#ifndef RANKCOMPAT_STATUS_H_
#define RANKCOMPAT_STATUS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace rankcompat {

enum class ErrorCode {
  kSingleClass,
  kLengthMismatch,
  kOriginalAllWrong,
  kOriginalNoCorrectPairs,
  kNoOrderedPairs,
  kOutOfRegime,
  kNonFiniteScore,
  kDimensionMismatch,
  kMissingOriginal,
  kSpecTooLarge,
  kEmptyCandidates,
  kTooFewReplications,
  kEmptyInput,
  kInfeasibleCounts,
  kInvalidConfig,
  kParseError,
  kSchemaError,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Data errors are problems with inputs (files, shapes, configs); numeric
// errors are degenerate metric denominators or out-of-regime values.
bool IsNumericError(ErrorCode code);

// Every failure in the library is reported through this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rankcompat

#endif  // RANKCOMPAT_STATUS_H_
