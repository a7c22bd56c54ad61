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
#ifndef SIMFUSE_INTEGRATE_H_
#define SIMFUSE_INTEGRATE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "simfuse/fgs.h"
#include "simfuse/hsic.h"
#include "simfuse/linear.h"
#include "simfuse/predictor.h"
#include "simfuse/snf.h"
#include "simfuse/types.h"

namespace simfuse {

struct IntegratorConfig {
  Method method = Method::kFgs;
  FgsParams fgs;
  HsicOptions hsic;
  SnfParams snf;
  int lic_k = 5;
  ConsistencyReading reading = ConsistencyReading::kNeighborSameTarget;
  // SNF-F inner evaluation.
  int snff_inner_folds = 5;
  std::uint64_t snff_seed = 0;

  ParamMap to_params() const;
};

struct SideIntegration {
  FusedSimilarity fused;
  // FGS only.
  std::optional<WeightMatrix> weights;
  // Linear baselines only.
  std::optional<GlobalWeights> global_weights;
  // SNF-H / SNF-F only.
  std::vector<int> selected_views;
};

/// Runs one integrator on one side. y is side-oriented (Y for drugs, Y^T
/// for targets). other_views is only read by SNF-F, whose inner model sees
/// the AVE fusion of the other side; model_factory is only read by SNF-F.
SideIntegration integrate_side(std::span<const SimilarityView> views,
                               std::span<const SimilarityView> other_views,
                               const Matrix& y, const IntegratorConfig& config,
                               const BaseModelFactory& model_factory = {});

}  // namespace simfuse

#endif  // SIMFUSE_INTEGRATE_H_
