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
#ifndef SIMFUSE_SYNTHETIC_H_
#define SIMFUSE_SYNTHETIC_H_

#include <cstdint>
#include <vector>

#include "simfuse/types.h"

namespace simfuse {

struct SyntheticSpec {
  int num_drugs = 60;
  int num_targets = 60;
  int drug_views = 4;
  int target_views = 4;
  // Applied to both sides.
  int signal_views = 1;
  double noise_level = 0.1;
  std::uint64_t seed = 0;
  // Entities per planted cluster (at least two clusters per side).
  int cluster_size = 6;
  // Interaction probability inside a linked block and elsewhere.
  double p_linked = 0.5;
  double p_background = 0.01;
};

struct SyntheticDataset {
  Dataset dataset;
  std::vector<int> drug_cluster;
  std::vector<int> target_cluster;
  // Positions of the signal views, ascending.
  std::vector<int> drug_signal_views;
  std::vector<int> target_signal_views;
};

/// Planted block structure: entities fall into clusters, each drug cluster
/// is linked to one target cluster (plus a second one for every third
/// cluster), and linked blocks are dense with interactions. Signal views
/// score 0.8 within a cluster and 0.2 across, plus Gaussian noise of
/// standard deviation noise_level, clipped to [0,1] and symmetrized. Noise
/// views are symmetric uniform [0,1] draws. Signal view positions are drawn
/// from the seed. Throws kInvalidArgument for sizes below 4 or an
/// out-of-range signal view count.
SyntheticDataset generate_synthetic(const SyntheticSpec& spec);

}  // namespace simfuse

#endif  // SIMFUSE_SYNTHETIC_H_
