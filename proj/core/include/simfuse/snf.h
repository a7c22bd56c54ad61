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
#ifndef SIMFUSE_SNF_H_
#define SIMFUSE_SNF_H_

#include <cstdint>
#include <span>
#include <vector>

#include "simfuse/predictor.h"
#include "simfuse/types.h"

namespace simfuse {

/// Denominator used by snf_normalize for off-diagonal (i,j).
enum class SnfNormalization {
  // 2 * sum_{l != i} S(l,j), as the update rule is usually printed.
  kAsPrinted,
  // 2 * sum_{l != j} S(l,j): every column's off-diagonal mass is 0.5.
  kColumnOffDiagonal,
  // 2 * sum_{l != i} S(i,l): the row-indexed form common in SNF code.
  kRowOffDiagonal,
};

struct SnfParams {
  int k = 5;
  int iters = 2;
  // Carried for configuration fidelity; the diffusion does not use it.
  double alpha = 1.0;
  // SNF-H entropy and redundancy quantiles.
  double c1 = 0.7;
  double c2 = 0.6;
  SnfNormalization normalization = SnfNormalization::kAsPrinted;

  // Throws kInvalidArgument for k < 1, iters < 1 or c outside (0,1].
  void validate() const;
  ParamMap to_params() const;
};

/// Diagonal 0.5, off-diagonal S(i,j) / denominator. A zero denominator
/// makes that column's off-diagonal entries uniform 0.5/(n-1) with a
/// warning.
Matrix snf_normalize(const Matrix& s,
                     SnfNormalization mode = SnfNormalization::kAsPrinted);

/// Row i keeps S(i,j) for the k nearest neighbours j of i, scaled to sum to
/// 1; everything else is 0. A row whose neighbour similarities are all zero
/// becomes uniform over those neighbours, with a warning.
Matrix snf_local_affinity(const Matrix& s, int k);

/// Synchronous cross-view diffusion
///   P_h <- Q_h (sum_{i != h} P_i / (m - 1)) Q_h^T
/// for params.iters rounds, then the mean of the P_h.
/// Throws kTooFewViews for fewer than two views.
FusedSimilarity snf_fuse(std::span<const SimilarityView> views,
                         const SnfParams& params = {});

/// Mean Shannon entropy of the row-normalized matrix, divided by log(n) so
/// that a constant matrix scores 1.
double view_entropy(const Matrix& s);

// Linear-interpolation quantile (the "type 7" rule) of unsorted values.
double quantile(std::vector<double> values, double q);

/// SNF-H view selection:
///  1. drop views whose entropy is strictly above the c1-quantile of all
///     view entropies;
///  2. among the rest, visit pairs by ascending Frobenius distance (ties by
///     index) and, while both members survive, drop the higher-entropy one
///     (ties: higher index) if the distance is zero or strictly below the
///     c2-quantile of the surviving pairwise distances.
/// Returns ascending indices; never empty.
std::vector<int> snfh_select(std::span<const SimilarityView> views,
                             const SnfParams& params = {});

/// Selection plus diffusion. A single surviving view is passed through.
FusedSimilarity snfh_fuse(std::span<const SimilarityView> views,
                          const SnfParams& params = {});

struct ForwardSelectionOptions {
  // Similarity of the other side handed to the inner base model.
  Matrix other_side;
  BaseModelFactory model_factory;
  std::uint64_t seed = 0;
  int inner_folds = 5;
};

/// Greedy forward selection: starting from nothing, add the view whose
/// inclusion gives the highest inner CVS_p AUPR (SNF-fused for two or more
/// views, the raw view for one); stop as soon as the best addition does not
/// strictly improve on the current AUPR. Ties go to the lower index.
/// y is the side-oriented interaction matrix (rows = entities of views).
std::vector<int> snff_select(std::span<const SimilarityView> views,
                             const Matrix& y, const SnfParams& params,
                             const ForwardSelectionOptions& options);

/// Inner-CV AUPR of the base model on a candidate similarity.
double snff_inner_aupr(const Matrix& similarity, const Matrix& y,
                       const ForwardSelectionOptions& options);

FusedSimilarity snff_fuse(std::span<const SimilarityView> views,
                          const Matrix& y, const SnfParams& params,
                          const ForwardSelectionOptions& options);

}  // namespace simfuse

#endif  // SIMFUSE_SNF_H_
