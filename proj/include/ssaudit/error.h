// Copyright 2026 The ssaudit Authors.
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

#ifndef SSAUDIT_ERROR_H_
#define SSAUDIT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ssaudit {

// Every failure raised by the library carries one of these codes so callers
// (notably the CLI) can map it onto an exit status.
enum class ErrorCode {
  kEmptyInput,
  kAlignment,
  kParse,
  kIo,
  kNoSense,
  kDegenerateVector,
  kOovWord,
  kBandOutOfRange,
  kAdapter,
  kEmptyPrediction,
  kUnknownPreset,
  kNotASubstitution,
  kInsufficientData,
  kEmptySeries,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& message);

}  // namespace ssaudit

#endif  // SSAUDIT_ERROR_H_
