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
#ifndef SIMFUSE_METRICS_H_
#define SIMFUSE_METRICS_H_

#include <span>

namespace simfuse {

// Labels are treated as positive when > 0.5.

/// Probability that a random positive outranks a random negative, ties
/// counted 1/2 (Mann-Whitney via average ranks). Throws kDegenerateLabels
/// unless both classes are present.
double auc(std::span<const double> scores, std::span<const double> labels);

/// Step-wise average precision: sweep scores in descending order, treating
/// each run of equal scores as one block, and add
/// precision-after-block * (positives in block / total positives).
/// Throws kNoPositives.
double aupr(std::span<const double> scores, std::span<const double> labels);

}  // namespace simfuse

#endif  // SIMFUSE_METRICS_H_
