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
#include "simfuse/knn.h"

#include <algorithm>
#include <string>
#include <utility>

#include "simfuse/errors.h"

namespace simfuse {

NeighborList knn_of(std::span<const double> row, int query_index, int k,
                    std::optional<std::span<const int>> candidates) {
  const int n = static_cast<int>(row.size());
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (query_index < 0 || query_index >= n) {
    throw Error(ErrorCode::kInvalidArgument,
                "query index " + std::to_string(query_index) + " out of range");
  }
  std::vector<std::pair<double, int>> pool;
  if (candidates) {
    pool.reserve(candidates->size());
    for (int c : *candidates) {
      if (c < 0 || c >= n) {
        throw Error(ErrorCode::kInvalidArgument,
                    "candidate index " + std::to_string(c) + " out of range");
      }
      if (c != query_index) pool.emplace_back(row[c], c);
    }
  } else {
    pool.reserve(n > 0 ? n - 1 : 0);
    for (int c = 0; c < n; ++c) {
      if (c != query_index) pool.emplace_back(row[c], c);
    }
  }
  if (pool.empty()) {
    throw Error(ErrorCode::kEmptyCandidatePool,
                "no neighbour candidates for entity " + std::to_string(query_index));
  }
  const auto before = [](const std::pair<double, int>& a,
                         const std::pair<double, int>& b) {
    return a.first > b.first || (a.first == b.first && a.second < b.second);
  };
  const int take = std::min<int>(k, static_cast<int>(pool.size()));
  std::partial_sort(pool.begin(), pool.begin() + take, pool.end(), before);

  NeighborList out;
  out.indices.reserve(take);
  out.similarities.reserve(take);
  for (int r = 0; r < take; ++r) {
    out.similarities.push_back(pool[r].first);
    out.indices.push_back(pool[r].second);
  }
  return out;
}

NeighborList knn_of(const SimilarityView& view, int query_index, int k,
                    std::optional<std::span<const int>> candidates) {
  if (query_index < 0 || query_index >= view.matrix.rows()) {
    throw Error(ErrorCode::kInvalidArgument,
                "query index " + std::to_string(query_index) + " out of range");
  }
  return knn_of(row_span(view.matrix, query_index), query_index, k, candidates);
}

}  // namespace simfuse
