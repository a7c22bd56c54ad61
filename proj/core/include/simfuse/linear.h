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
#ifndef SIMFUSE_LINEAR_H_
#define SIMFUSE_LINEAR_H_

#include <span>

#include "simfuse/types.h"

namespace simfuse {

// Linear integrators. Every function takes the interaction matrix from the
// side being fused: Y for drug views, Y^T for target views.

/// sum_h w_h * S_h. Throws kShapeMismatch on inconsistent inputs.
FusedSimilarity fuse_linear(std::span<const SimilarityView> views,
                            const GlobalWeights& weights);

GlobalWeights ave_weights(int num_views);

/// Z = Y Y^T. Entry (i,i) is the degree of entity i.
Matrix ideal_similarity(const Matrix& y);

/// <A,Z>_F / sqrt(<A,A>_F <Z,Z>_F). Throws kDegenerateInput when either
/// Frobenius norm is zero and kShapeMismatch on differing shapes.
double kernel_alignment(const Matrix& a, const Matrix& z);

/// Alignments against the ideal similarity, scaled onto the simplex.
/// Throws kAllZeroAlignment when every alignment is zero.
GlobalWeights ka_weights(std::span<const SimilarityView> views,
                         const Matrix& y);

/// Which label the consistency indicator compares against Y(i,j).
enum class ConsistencyReading {
  // Y(l,j): the neighbour's label for the same target j.
  kNeighborSameTarget,
  // Y(i,l): the neighbour index used as a column of i's own profile. Only
  // defined when Y has at least as many columns as rows.
  kLiteral,
};

/// Local interaction consistency C (n x n_t): the similarity-weighted
/// fraction of the k nearest neighbours of i that agree with Y(i,j).
/// Rows whose neighbour similarities are all zero are 0.
Matrix lic_consistency_matrix(
    const Matrix& similarity, const Matrix& y, int k,
    ConsistencyReading reading = ConsistencyReading::kNeighborSameTarget);

/// Mean of C over the interacting pairs, per view, normalized onto the
/// simplex. Throws kNoInteractions when Y has no ones and
/// kDegenerateInput when every view has zero mean consistency.
GlobalWeights lic_weights(
    std::span<const SimilarityView> views, const Matrix& y, int k,
    ConsistencyReading reading = ConsistencyReading::kNeighborSameTarget);

/// Unnormalized per-view mean consistency over interacting pairs.
Vector lic_view_consistency(
    std::span<const SimilarityView> views, const Matrix& y, int k,
    ConsistencyReading reading = ConsistencyReading::kNeighborSameTarget);

// Sum 1 within tol and no negative entries.
bool is_simplex(const Vector& w, double tol = 1e-12);

}  // namespace simfuse

#endif  // SIMFUSE_LINEAR_H_
