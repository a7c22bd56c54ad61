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
#include "simfuse/synthetic.h"

#include <algorithm>
#include <string>

#include "simfuse/errors.h"
#include "simfuse/rng.h"

namespace simfuse {
namespace {

std::vector<std::string> make_ids(char prefix, int n) {
  const int width = static_cast<int>(std::to_string(n - 1).size());
  std::vector<std::string> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::string digits = std::to_string(i);
    ids[static_cast<std::size_t>(i)] =
        std::string(1, prefix) + std::string(static_cast<std::size_t>(width) - digits.size(), '0') + digits;
  }
  return ids;
}

std::vector<int> assign_clusters(int n, int cluster_size, SplitMix64& rng) {
  const int clusters = std::max(2, n / cluster_size);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  shuffle_indices(order, rng);
  std::vector<int> cluster(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) cluster[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p % clusters;
  return cluster;
}

Matrix signal_view(const std::vector<int>& cluster, double noise, SplitMix64& rng) {
  const auto n = static_cast<Eigen::Index>(cluster.size());
  Matrix s = Matrix::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double base = cluster[static_cast<std::size_t>(i)] == cluster[static_cast<std::size_t>(j)] ? 0.8 : 0.2;
      const double v = std::clamp(base + noise * rng.normal(), 0.0, 1.0);
      s(i, j) = v;
      s(j, i) = v;
    }
  }
  return s;
}

Matrix noise_view(Eigen::Index n, SplitMix64& rng) {
  Matrix s = Matrix::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double v = rng.uniform();
      s(i, j) = v;
      s(j, i) = v;
    }
  }
  return s;
}

std::vector<int> pick_signal_positions(int m, int count, SplitMix64& rng) {
  std::vector<int> positions(static_cast<std::size_t>(m));
  for (int h = 0; h < m; ++h) positions[static_cast<std::size_t>(h)] = h;
  shuffle_indices(positions, rng);
  positions.resize(static_cast<std::size_t>(count));
  std::sort(positions.begin(), positions.end());
  return positions;
}

std::vector<SimilarityView> make_views(const std::vector<int>& cluster, int m,
                                       const std::vector<int>& signal, double noise,
                                       EntityKind kind, SplitMix64& rng) {
  std::vector<SimilarityView> views;
  const auto n = static_cast<Eigen::Index>(cluster.size());
  const char prefix = kind == EntityKind::kDrug ? 'd' : 't';
  for (int h = 0; h < m; ++h) {
    SplitMix64 stream = rng.split();
    const bool is_signal = std::binary_search(signal.begin(), signal.end(), h);
    SimilarityView view;
    view.kind = kind;
    view.label = std::string(1, prefix) + (is_signal ? "signal" : "noise") + std::to_string(h);
    view.matrix = is_signal ? signal_view(cluster, noise, stream) : noise_view(n, stream);
    views.push_back(std::move(view));
  }
  return views;
}

}  // namespace

SyntheticDataset generate_synthetic(const SyntheticSpec& spec) {
  if (spec.num_drugs < 4 || spec.num_targets < 4) {
    throw Error(ErrorCode::kInvalidArgument, "synthetic data needs at least 4 drugs and 4 targets");
  }
  if (spec.drug_views < 1 || spec.target_views < 1) {
    throw Error(ErrorCode::kInvalidArgument, "synthetic data needs at least one view per side");
  }
  if (spec.signal_views < 1 || spec.signal_views > std::min(spec.drug_views, spec.target_views)) {
    throw Error(ErrorCode::kInvalidArgument, "signal_views must lie in [1, views per side]");
  }
  if (spec.cluster_size < 1 || !(spec.noise_level >= 0.0) ||
      !(spec.p_linked >= 0.0 && spec.p_linked <= 1.0) ||
      !(spec.p_background >= 0.0 && spec.p_background <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid synthetic parameters");
  }

  SplitMix64 rng(spec.seed);
  SplitMix64 cluster_rng = rng.split();
  SplitMix64 link_rng = rng.split();
  SplitMix64 y_rng = rng.split();
  SplitMix64 drug_rng = rng.split();
  SplitMix64 target_rng = rng.split();

  SyntheticDataset out;
  out.drug_cluster = assign_clusters(spec.num_drugs, spec.cluster_size, cluster_rng);
  out.target_cluster = assign_clusters(spec.num_targets, spec.cluster_size, cluster_rng);
  const int drug_clusters = *std::max_element(out.drug_cluster.begin(), out.drug_cluster.end()) + 1;
  const int target_clusters = *std::max_element(out.target_cluster.begin(), out.target_cluster.end()) + 1;

  // Each drug cluster binds one target cluster; every third binds a second.
  std::vector<int> perm(static_cast<std::size_t>(target_clusters));
  for (int c = 0; c < target_clusters; ++c) perm[static_cast<std::size_t>(c)] = c;
  shuffle_indices(perm, link_rng);
  Eigen::MatrixXi linked = Eigen::MatrixXi::Zero(drug_clusters, target_clusters);
  for (int c = 0; c < drug_clusters; ++c) {
    linked(c, perm[static_cast<std::size_t>(c % target_clusters)]) = 1;
    if (c % 3 == 0) linked(c, perm[static_cast<std::size_t>((c + 1) % target_clusters)]) = 1;
  }

  Matrix y = Matrix::Zero(spec.num_drugs, spec.num_targets);
  for (int i = 0; i < spec.num_drugs; ++i) {
    for (int j = 0; j < spec.num_targets; ++j) {
      const bool link = linked(out.drug_cluster[static_cast<std::size_t>(i)],
                               out.target_cluster[static_cast<std::size_t>(j)]) != 0;
      y(i, j) = y_rng.uniform() < (link ? spec.p_linked : spec.p_background) ? 1.0 : 0.0;
    }
  }

  out.drug_signal_views = pick_signal_positions(spec.drug_views, spec.signal_views, drug_rng);
  out.target_signal_views = pick_signal_positions(spec.target_views, spec.signal_views, target_rng);
  out.dataset.drug_views = make_views(out.drug_cluster, spec.drug_views, out.drug_signal_views,
                                      spec.noise_level, EntityKind::kDrug, drug_rng);
  out.dataset.target_views = make_views(out.target_cluster, spec.target_views, out.target_signal_views,
                                        spec.noise_level, EntityKind::kTarget, target_rng);
  out.dataset.interactions.matrix = std::move(y);
  out.dataset.interactions.drug_ids = make_ids('d', spec.num_drugs);
  out.dataset.interactions.target_ids = make_ids('t', spec.num_targets);
  return out;
}

}  // namespace simfuse
