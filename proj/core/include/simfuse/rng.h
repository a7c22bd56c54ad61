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

#ifndef SIMFUSE_RNG_H_
#define SIMFUSE_RNG_H_

#include <cstdint>
#include <vector>

namespace simfuse {

/// SplitMix64 stream. Every stochastic step in the library (fold shuffles,
/// synthetic data) draws from it so that any implementation can reproduce
/// identical folds from the same seed:
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
///
/// uniform() is (next() >> 11) * 2^-53; below(n) is next() % n.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  double uniform();
  std::uint64_t below(std::uint64_t bound);
  // Box-Muller on two uniform() draws; no cached second deviate.
  double normal();
  // Independent child stream seeded by this stream's next output.
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

/// Fisher-Yates, i from size-1 down to 1, j = below(i + 1).
void shuffle_indices(std::vector<int>& values, SplitMix64& rng);

}  // namespace simfuse

#endif  // SIMFUSE_RNG_H_
