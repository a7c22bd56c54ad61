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
#ifndef SIMFUSE_KNN_H_
#define SIMFUSE_KNN_H_

#include <optional>
#include <span>
#include <vector>

#include "simfuse/types.h"

namespace simfuse {

struct NeighborList {
  std::vector<int> indices;
  std::vector<double> similarities;

  int size() const { return static_cast<int>(indices.size()); }
};

/// The k most similar entities to query_index according to row, never
/// including the query itself. Ties rank by ascending entity index. When
/// candidates is given only those indices are considered. Zero-similarity
/// neighbours are admitted.
///
/// Throws kEmptyCandidatePool if nothing is left to choose from and
/// kInvalidArgument for k < 1 or an out-of-range query.
NeighborList knn_of(std::span<const double> row, int query_index, int k,
                    std::optional<std::span<const int>> candidates = {});

NeighborList knn_of(const SimilarityView& view, int query_index, int k,
                    std::optional<std::span<const int>> candidates = {});

}  // namespace simfuse

#endif  // SIMFUSE_KNN_H_
