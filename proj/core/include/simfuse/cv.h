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
#ifndef SIMFUSE_CV_H_
#define SIMFUSE_CV_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simfuse/types.h"

namespace simfuse {

enum class CvSetting { kCvsD, kCvsT, kCvsDt, kCvsP, kCluCvsD };

std::string_view to_string(CvSetting setting);
std::optional<CvSetting> parse_cv_setting(std::string_view name);

/// Fold assignment for one cross-validation run.
///
/// Entities (or pairs, for CVS_p) are shuffled with SplitMix64(seed) and cut
/// into consecutive chunks; the first (n mod folds) chunks are one larger.
/// CVS_dt uses independent drug and target shuffles from the same stream
/// (drugs first) and crosses them into folds x folds test blocks, block
/// b = drug fold (b / folds) x target fold (b % folds).
struct CvPlan {
  CvSetting setting = CvSetting::kCvsD;
  int folds = 10;
  std::uint64_t seed = 0;
  int num_drugs = 0;
  int num_targets = 0;
  // -1 where the setting does not split that axis.
  std::vector<int> drug_fold;
  std::vector<int> target_fold;
  // CVS_p only, row-major over (drug, target).
  std::vector<int> pair_fold;

  int num_blocks() const;
};

/// Throws kInvalidArgument for folds < 2 and kTooFewEntities when an axis
/// has fewer entities (or pairs) than folds.
CvPlan make_cv_plan(int num_drugs, int num_targets, CvSetting setting,
                    int folds, std::uint64_t seed);
CvPlan make_cv_plan(const Dataset& dataset, CvSetting setting, int folds,
                    std::uint64_t seed);

/// Single-linkage clusters of drugs under the named drug view (an edge when
/// S(i,j) or S(j,i) exceeds threshold). Clusters are shuffled, then each
/// goes to the currently smallest fold (lowest id on ties). Throws
/// kSingleCluster when everything collapses into one cluster and
/// kTooFewEntities when there are fewer clusters than folds.
CvPlan make_cluster_cv_plan(const Dataset& dataset,
                            std::string_view view_label, double threshold,
                            int folds, std::uint64_t seed);

/// Connected components of the "> threshold" graph, numbered 0, 1, ... in
/// order of their smallest member.
std::vector<int> single_linkage_clusters(const Matrix& similarity,
                                         double threshold);

/// Pairs held out by a block, in drug-major order.
std::vector<EntityPair> test_pairs(const CvPlan& plan, int block);

/// Copy of y with the block's test rows, columns or cells zeroed.
Matrix training_interactions(const CvPlan& plan, int block, const Matrix& y);

}  // namespace simfuse

#endif  // SIMFUSE_CV_H_
