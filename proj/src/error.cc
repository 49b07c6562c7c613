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

#include "ssaudit/error.h"

namespace ssaudit {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kAlignment: return "AlignmentError";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kNoSense: return "NoSense";
    case ErrorCode::kDegenerateVector: return "DegenerateVector";
    case ErrorCode::kOovWord: return "OovWord";
    case ErrorCode::kBandOutOfRange: return "BandOutOfRange";
    case ErrorCode::kAdapter: return "AdapterError";
    case ErrorCode::kEmptyPrediction: return "EmptyPrediction";
    case ErrorCode::kUnknownPreset: return "UnknownPreset";
    case ErrorCode::kNotASubstitution: return "NotASubstitution";
    case ErrorCode::kInsufficientData: return "InsufficientData";
    case ErrorCode::kEmptySeries: return "EmptySeries";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace ssaudit
