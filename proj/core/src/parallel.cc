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
#include "simfuse/parallel.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace simfuse {
namespace {

std::atomic<int> g_override{0};

int env_threads() {
  const char* value = std::getenv("SIMFUSE_THREADS");
  if (value == nullptr) return 0;
  try {
    return std::max(0, std::stoi(value));
  } catch (const std::exception&) {
    return 0;
  }
}

}  // namespace

int thread_count() {
  if (int forced = g_override.load(); forced > 0) return forced;
  if (int env = env_threads(); env > 0) return env;
  return std::max(1u, std::thread::hardware_concurrency());
}

void set_thread_count(int threads) { g_override = std::max(0, threads); }

void parallel_for(int n, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  const int workers = std::min(thread_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  auto run_chunk = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  const int base = n / workers;
  const int extra = n % workers;
  int begin = 0;
  for (int w = 0; w < workers; ++w) {
    const int end = begin + base + (w < extra ? 1 : 0);
    if (w + 1 == workers) {
      run_chunk(begin, end);
    } else {
      threads.emplace_back(run_chunk, begin, end);
    }
    begin = end;
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace simfuse
