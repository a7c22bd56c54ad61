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

#ifndef SIMFUSE_PARALLEL_H_
#define SIMFUSE_PARALLEL_H_

#include <functional>

namespace simfuse {

// Worker count: set_thread_count() override if positive, else the
// SIMFUSE_THREADS environment variable, else hardware concurrency.
int thread_count();
void set_thread_count(int threads);

// Runs fn(0) .. fn(n-1) over a static partition of the index range. Each
// index must write only its own output slot; results are then independent
// of the worker count. The exception thrown by the lowest failing index is
// rethrown on the calling thread.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace simfuse

#endif  // SIMFUSE_PARALLEL_H_
