/*
 * Copyright 2026 The simfuse Authors.
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
#include "simfuse/errors.h"

namespace simfuse {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kEmptyCandidatePool: return "EmptyCandidatePool";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kAllZeroAlignment: return "AllZeroAlignment";
    case ErrorCode::kNoInteractions: return "NoInteractions";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kTooFewViews: return "TooFewViews";
    case ErrorCode::kNoKnownEntities: return "NoKnownEntities";
    case ErrorCode::kZeroRow: return "ZeroRow";
    case ErrorCode::kTooFewEntities: return "TooFewEntities";
    case ErrorCode::kSingleCluster: return "SingleCluster";
    case ErrorCode::kDegenerateLabels: return "DegenerateLabels";
    case ErrorCode::kNoPositives: return "NoPositives";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIdMismatch: return "IdMismatch";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kFoldFailed: return "FoldFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

}  // namespace simfuse
