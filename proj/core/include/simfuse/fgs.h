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
#ifndef SIMFUSE_FGS_H_
#define SIMFUSE_FGS_H_

#include <span>

#include "simfuse/linear.h"
#include "simfuse/types.h"

namespace simfuse {

// Fine-grained selective similarity integration. Each entity i gets its own
// weight over the m views; the fused row i is sum_h W(i,h) S_h(i,.).
//
// Pipeline:
//   init       W(i,h) = sum_j C_h(i,j) Y(i,j)
//   complete   known entities with an all-zero row take v = sum_i W(i,.)
//   infer      new entity x: W(x,h) = sum of W(.,h) over the k nearest
//              known entities of x in view h
//   select     zero the floor(rho*m) smallest entries of every row
//   normalize  rows onto the simplex
//   fuse       row-wise weighted sum
//
// For target views pass Y^T.

struct FgsParams {
  int k = 5;
  double rho = 0.5;
  ConsistencyReading reading = ConsistencyReading::kNeighborSameTarget;

  // Throws kInvalidArgument for k < 1 or rho outside [0,1).
  void validate() const;
  ParamMap to_params() const;
};

WeightMatrix fgs_init_weights(
    std::span<const SimilarityView> views, const Matrix& y, int k,
    ConsistencyReading reading = ConsistencyReading::kNeighborSameTarget);

/// v = column sums of w.
Vector fgs_global_vector(const WeightMatrix& w);

/// Rows listed in known_set that are all zero receive the column sums of
/// the input. If those sums are all zero too, such rows become all ones
/// (uniform after normalization) and a warning is issued.
WeightMatrix fgs_complete_zero_rows(const WeightMatrix& w,
                                    std::span<const int> known_set);

/// Sums neighbour weights for every new entity, reading only rows in
/// known_set. A row that comes out all zero takes fallback (default: the
/// column sums of the known rows; all ones if that is zero as well).
/// Throws kNoKnownEntities when new_set is non-empty and known_set empty.
WeightMatrix fgs_infer_new_entity_weights(
    const WeightMatrix& w, std::span<const SimilarityView> views,
    std::span<const int> new_set, std::span<const int> known_set, int k,
    const Vector* fallback = nullptr);

/// floor(rho*m), capped at m-1.
int fgs_selection_count(int num_views, double rho);

/// Zeroes the fgs_selection_count() smallest entries of every row; equal
/// values are taken in ascending view order.
WeightMatrix fgs_select(const WeightMatrix& w, double rho);

/// Rows divided by their left-to-right sum. Throws kZeroRow.
WeightMatrix fgs_normalize(const WeightMatrix& w);

/// S(i,.) = sum_h W(i,h) S_h(i,.). Summation runs over h in order.
Matrix fuse_rows(std::span<const SimilarityView> views, const Matrix& w);

/// Everything up to and including normalization.
WeightMatrix fgs_weights(std::span<const SimilarityView> views,
                         const Matrix& y, const FgsParams& params);

/// complete -> infer -> select -> normalize, starting from an arbitrary
/// initial weight matrix. fgs_weights() is this applied to
/// fgs_init_weights().
WeightMatrix fgs_weights_from_init(const WeightMatrix& initial,
                                   std::span<const SimilarityView> views,
                                   const Matrix& y, const FgsParams& params);

struct FgsResult {
  FusedSimilarity fused;
  WeightMatrix weights;
};

FgsResult fgs_fuse(std::span<const SimilarityView> views, const Matrix& y,
                   const FgsParams& params = {});

}  // namespace simfuse

#endif  // SIMFUSE_FGS_H_
