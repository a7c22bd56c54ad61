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
#ifndef SIMFUSE_HSIC_H_
#define SIMFUSE_HSIC_H_

#include <span>
#include <vector>

#include "simfuse/types.h"

namespace simfuse {

struct HsicOptions {
  double lambda1 = 0.25;
  double lambda2 = 0.25;
  int max_iters = 500;
  double tol = 1e-9;
};

/// The HSIC multiple-kernel objective reduced to the m-dimensional weight
/// vector:
///
///   f(w) = dependence . w + lambda1 * w^T L w + lambda2 * |w|^2
///
/// with dependence_h = tr(S_h H Z H) / n^2, H the centering matrix,
/// L = diag(U e) - U and U(i,j) the kernel alignment of views i and j.
/// It is maximized over the simplex exactly as written, regularizer signs
/// included.
struct HsicProblem {
  Vector dependence;
  Matrix laplacian;
  double lambda1 = 0.0;
  double lambda2 = 0.0;

  int num_views() const { return static_cast<int>(dependence.size()); }
  double objective(const Vector& w) const;
  Vector gradient(const Vector& w) const;
};

HsicProblem make_hsic_problem(std::span<const SimilarityView> views,
                              const Matrix& y, double lambda1,
                              double lambda2);

struct HsicResult {
  Vector weights;
  double objective = 0.0;
  int iterations = 0;
  // Objective after every accepted step of the winning start; non-decreasing.
  std::vector<double> trace;
};

/// Projected gradient ascent with Euclidean projection onto the simplex,
/// run from the barycentre and from every vertex; the best end point wins
/// (earlier starts win ties). Step size starts at 1 / Lipschitz bound and
/// is halved whenever a step would lower the objective. Stops when the
/// objective changes by less than tol or after max_iters steps.
/// Throws kNonFinite if the objective stops being finite.
HsicResult solve_hsic(const HsicProblem& problem, int max_iters, double tol);

GlobalWeights hsic_weights(std::span<const SimilarityView> views,
                           const Matrix& y, const HsicOptions& options = {});

/// Euclidean projection onto {w : w >= 0, sum w = 1}.
Vector project_to_simplex(const Vector& v);

}  // namespace simfuse

#endif  // SIMFUSE_HSIC_H_
