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

#ifndef SIMFUSE_ERRORS_H_
#define SIMFUSE_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace simfuse {

enum class ErrorCode {
  kInvalidArgument,
  kShapeMismatch,
  kEmptyCandidatePool,
  kDegenerateInput,
  kAllZeroAlignment,
  kNoInteractions,
  kNonFinite,
  kTooFewViews,
  kNoKnownEntities,
  kZeroRow,
  kTooFewEntities,
  kSingleCluster,
  kDegenerateLabels,
  kNoPositives,
  kParseError,
  kIdMismatch,
  kIoError,
  kFoldFailed,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map them to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace simfuse

#endif  // SIMFUSE_ERRORS_H_
