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
#include "simfuse/metrics.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "simfuse/errors.h"

namespace simfuse {
namespace {

void require_same_length(std::span<const double> scores,
                         std::span<const double> labels) {
  if (scores.size() != labels.size()) {
    throw Error(ErrorCode::kShapeMismatch, "scores and labels differ in length");
  }
}

}  // namespace

double auc(std::span<const double> scores, std::span<const double> labels) {
  require_same_length(scores, labels);
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  double positives = 0.0;
  double rank_sum = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]]) ++j;
    // Ranks i+1 .. j share their average.
    const double average_rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t t = i; t < j; ++t) {
      if (labels[order[t]] > 0.5) {
        positives += 1.0;
        rank_sum += average_rank;
      }
    }
    i = j;
  }
  const double negatives = static_cast<double>(n) - positives;
  if (positives == 0.0 || negatives == 0.0) {
    throw Error(ErrorCode::kDegenerateLabels, "AUC needs both positive and negative labels");
  }
  return (rank_sum - positives * (positives + 1.0) / 2.0) / (positives * negatives);
}

double aupr(std::span<const double> scores, std::span<const double> labels) {
  require_same_length(scores, labels);
  const std::size_t n = scores.size();
  double total_positives = 0.0;
  for (double l : labels) total_positives += l > 0.5 ? 1.0 : 0.0;
  if (total_positives == 0.0) {
    throw Error(ErrorCode::kNoPositives, "AUPR needs at least one positive label");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  double tp = 0.0, fp = 0.0, area = 0.0;
  std::size_t i = 0;
  while (i < n) {
    double block_tp = 0.0, block_fp = 0.0;
    std::size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]]) {
      if (labels[order[j]] > 0.5) {
        block_tp += 1.0;
      } else {
        block_fp += 1.0;
      }
      ++j;
    }
    tp += block_tp;
    fp += block_fp;
    if (block_tp > 0.0) area += (tp / (tp + fp)) * (block_tp / total_positives);
    i = j;
  }
  return area;
}

}  // namespace simfuse
