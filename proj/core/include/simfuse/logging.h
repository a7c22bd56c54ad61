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

#ifndef SIMFUSE_LOGGING_H_
#define SIMFUSE_LOGGING_H_

#include <cstddef>
#include <string_view>

namespace simfuse {

// Warnings go to standard error unless muted. The counter keeps running
// while muted so tests can still observe that a fallback path fired.
void warn(std::string_view message);
void set_warnings_muted(bool muted);
std::size_t warning_count();

}  // namespace simfuse

#endif  // SIMFUSE_LOGGING_H_
