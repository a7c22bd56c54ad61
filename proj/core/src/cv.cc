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
#include "simfuse/cv.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

#include "simfuse/errors.h"
#include "simfuse/rng.h"

namespace simfuse {
namespace {

std::vector<int> assign_folds(int n, int folds, SplitMix64& rng,
                              std::string_view what) {
  if (n < folds) {
    throw Error(ErrorCode::kTooFewEntities,
                std::to_string(n) + " " + std::string(what) + " cannot fill " +
                    std::to_string(folds) + " folds");
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  shuffle_indices(order, rng);
  std::vector<int> fold(n, -1);
  const int base = n / folds;
  const int extra = n % folds;
  int pos = 0;
  for (int f = 0; f < folds; ++f) {
    const int size = base + (f < extra ? 1 : 0);
    for (int t = 0; t < size; ++t) fold[order[pos++]] = f;
  }
  return fold;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void require_block(const CvPlan& plan, int block) {
  if (block < 0 || block >= plan.num_blocks()) {
    throw Error(ErrorCode::kInvalidArgument, "block " + std::to_string(block) + " out of range");
  }
}

bool drug_held_out(const CvPlan& plan, int block, int d) {
  switch (plan.setting) {
    case CvSetting::kCvsD:
    case CvSetting::kCluCvsD:
      return plan.drug_fold[d] == block;
    case CvSetting::kCvsDt:
      return plan.drug_fold[d] == block / plan.folds;
    default:
      return false;
  }
}

bool target_held_out(const CvPlan& plan, int block, int t) {
  switch (plan.setting) {
    case CvSetting::kCvsT:
      return plan.target_fold[t] == block;
    case CvSetting::kCvsDt:
      return plan.target_fold[t] == block % plan.folds;
    default:
      return false;
  }
}

}  // namespace

std::string_view to_string(CvSetting setting) {
  switch (setting) {
    case CvSetting::kCvsD: return "CVS_d";
    case CvSetting::kCvsT: return "CVS_t";
    case CvSetting::kCvsDt: return "CVS_dt";
    case CvSetting::kCvsP: return "CVS_p";
    case CvSetting::kCluCvsD: return "cluCVS_d";
  }
  return "unknown";
}

std::optional<CvSetting> parse_cv_setting(std::string_view name) {
  std::string lowered;
  for (char c : name) lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lowered == "cvs_d" || lowered == "d") return CvSetting::kCvsD;
  if (lowered == "cvs_t" || lowered == "t") return CvSetting::kCvsT;
  if (lowered == "cvs_dt" || lowered == "dt") return CvSetting::kCvsDt;
  if (lowered == "cvs_p" || lowered == "p") return CvSetting::kCvsP;
  if (lowered == "clucvs_d") return CvSetting::kCluCvsD;
  return std::nullopt;
}

int CvPlan::num_blocks() const {
  return setting == CvSetting::kCvsDt ? folds * folds : folds;
}

CvPlan make_cv_plan(int num_drugs, int num_targets, CvSetting setting,
                    int folds, std::uint64_t seed) {
  if (folds < 2) throw Error(ErrorCode::kInvalidArgument, "need at least 2 folds");
  if (num_drugs < 1 || num_targets < 1) {
    throw Error(ErrorCode::kTooFewEntities, "empty interaction matrix");
  }
  CvPlan plan;
  plan.setting = setting;
  plan.folds = folds;
  plan.seed = seed;
  plan.num_drugs = num_drugs;
  plan.num_targets = num_targets;
  plan.drug_fold.assign(num_drugs, -1);
  plan.target_fold.assign(num_targets, -1);
  SplitMix64 rng(seed);
  switch (setting) {
    case CvSetting::kCvsD:
      plan.drug_fold = assign_folds(num_drugs, folds, rng, "drugs");
      break;
    case CvSetting::kCvsT:
      plan.target_fold = assign_folds(num_targets, folds, rng, "targets");
      break;
    case CvSetting::kCvsDt:
      plan.drug_fold = assign_folds(num_drugs, folds, rng, "drugs");
      plan.target_fold = assign_folds(num_targets, folds, rng, "targets");
      break;
    case CvSetting::kCvsP:
      plan.pair_fold = assign_folds(num_drugs * num_targets, folds, rng, "pairs");
      break;
    case CvSetting::kCluCvsD:
      throw Error(ErrorCode::kInvalidArgument,
                  "cluCVS_d plans come from make_cluster_cv_plan()");
  }
  return plan;
}

CvPlan make_cv_plan(const Dataset& dataset, CvSetting setting, int folds,
                    std::uint64_t seed) {
  return make_cv_plan(dataset.num_drugs(), dataset.num_targets(), setting, folds, seed);
}

std::vector<int> single_linkage_clusters(const Matrix& similarity,
                                         double threshold) {
  const int n = static_cast<int>(similarity.rows());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (similarity(i, j) > threshold || similarity(j, i) > threshold) {
        const int a = find_root(parent, i);
        const int b = find_root(parent, j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<int> label(n, -1), cluster(n);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    const int root = find_root(parent, i);
    if (label[root] < 0) label[root] = next++;
    cluster[i] = label[root];
  }
  return cluster;
}

CvPlan make_cluster_cv_plan(const Dataset& dataset,
                            std::string_view view_label, double threshold,
                            int folds, std::uint64_t seed) {
  if (folds < 2) throw Error(ErrorCode::kInvalidArgument, "need at least 2 folds");
  const SimilarityView* view = nullptr;
  for (const auto& v : dataset.drug_views) {
    if (v.label == view_label) view = &v;
  }
  if (view == nullptr) {
    throw Error(ErrorCode::kInvalidArgument,
                "no drug view labelled '" + std::string(view_label) + "'");
  }
  const std::vector<int> cluster = single_linkage_clusters(view->matrix, threshold);
  const int num_clusters =
      cluster.empty() ? 0 : *std::max_element(cluster.begin(), cluster.end()) + 1;
  if (num_clusters <= 1) {
    throw Error(ErrorCode::kSingleCluster,
                "all " + std::to_string(cluster.size()) +
                    " drugs fall in one cluster at threshold " + std::to_string(threshold) +
                    " on view '" + view->label + "'");
  }
  if (num_clusters < folds) {
    throw Error(ErrorCode::kTooFewEntities,
                std::to_string(num_clusters) + " clusters cannot fill " +
                    std::to_string(folds) + " folds");
  }
  std::vector<int> size_of(num_clusters, 0);
  for (int c : cluster) ++size_of[c];
  std::vector<int> order(num_clusters);
  std::iota(order.begin(), order.end(), 0);
  SplitMix64 rng(seed);
  shuffle_indices(order, rng);

  std::vector<int> cluster_fold(num_clusters, -1);
  std::vector<int> fold_size(folds, 0);
  for (int c : order) {
    const int f = static_cast<int>(
        std::min_element(fold_size.begin(), fold_size.end()) - fold_size.begin());
    cluster_fold[c] = f;
    fold_size[f] += size_of[c];
  }
  CvPlan plan;
  plan.setting = CvSetting::kCluCvsD;
  plan.folds = folds;
  plan.seed = seed;
  plan.num_drugs = dataset.num_drugs();
  plan.num_targets = dataset.num_targets();
  plan.target_fold.assign(plan.num_targets, -1);
  plan.drug_fold.resize(plan.num_drugs);
  for (int d = 0; d < plan.num_drugs; ++d) plan.drug_fold[d] = cluster_fold[cluster[d]];
  return plan;
}

std::vector<EntityPair> test_pairs(const CvPlan& plan, int block) {
  require_block(plan, block);
  std::vector<EntityPair> out;
  for (int d = 0; d < plan.num_drugs; ++d) {
    for (int t = 0; t < plan.num_targets; ++t) {
      bool held;
      switch (plan.setting) {
        case CvSetting::kCvsD:
        case CvSetting::kCluCvsD:
          held = drug_held_out(plan, block, d);
          break;
        case CvSetting::kCvsT:
          held = target_held_out(plan, block, t);
          break;
        case CvSetting::kCvsDt:
          held = drug_held_out(plan, block, d) && target_held_out(plan, block, t);
          break;
        case CvSetting::kCvsP:
          held = plan.pair_fold[static_cast<std::size_t>(d) * plan.num_targets + t] == block;
          break;
        default:
          held = false;
      }
      if (held) out.push_back({d, t});
    }
  }
  return out;
}

Matrix training_interactions(const CvPlan& plan, int block, const Matrix& y) {
  require_block(plan, block);
  if (y.rows() != plan.num_drugs || y.cols() != plan.num_targets) {
    throw Error(ErrorCode::kShapeMismatch, "interaction matrix does not match the plan");
  }
  Matrix out = y;
  for (int d = 0; d < plan.num_drugs; ++d) {
    for (int t = 0; t < plan.num_targets; ++t) {
      bool blank;
      if (plan.setting == CvSetting::kCvsP) {
        blank = plan.pair_fold[static_cast<std::size_t>(d) * plan.num_targets + t] == block;
      } else {
        blank = drug_held_out(plan, block, d) || target_held_out(plan, block, t);
      }
      if (blank) out(d, t) = 0.0;
    }
  }
  return out;
}

}  // namespace simfuse
