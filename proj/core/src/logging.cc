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
#include "simfuse/logging.h"

#include <atomic>
#include <iostream>
#include <mutex>

namespace simfuse {
namespace {

std::atomic<bool> g_muted{false};
std::atomic<std::size_t> g_count{0};
std::mutex g_mutex;

}  // namespace

void warn(std::string_view message) {
  ++g_count;
  if (g_muted.load()) return;
  std::lock_guard<std::mutex> lock(g_mutex);
  std::cerr << "simfuse: warning: " << message << '\n';
}

void set_warnings_muted(bool muted) { g_muted = muted; }

std::size_t warning_count() { return g_count.load(); }

}  // namespace simfuse
