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
#include "simfuse/snf.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

#include "simfuse/cv.h"
#include "simfuse/errors.h"
#include "simfuse/knn.h"
#include "simfuse/logging.h"
#include "simfuse/metrics.h"
#include "simfuse/parallel.h"

namespace simfuse {
namespace {

void require_square_views(std::span<const SimilarityView> views) {
  if (views.empty()) throw Error(ErrorCode::kInvalidArgument, "no views given");
  const auto n = views.front().matrix.rows();
  for (const auto& v : views) {
    if (v.matrix.rows() != n || v.matrix.cols() != n) {
      throw Error(ErrorCode::kShapeMismatch, "view '" + v.label + "' has the wrong shape");
    }
  }
}

std::vector<SimilarityView> subset(std::span<const SimilarityView> views,
                                   const std::vector<int>& indices) {
  std::vector<SimilarityView> out;
  out.reserve(indices.size());
  for (int h : indices) out.push_back(views[h]);
  return out;
}

FusedSimilarity fuse_selected(std::span<const SimilarityView> views,
                              const std::vector<int>& selected,
                              const SnfParams& params, Method method) {
  FusedSimilarity out;
  if (selected.size() == 1) {
    out.matrix = views[selected.front()].matrix;
    out.params = params.to_params();
  } else {
    out = snf_fuse(subset(views, selected), params);
  }
  out.method = method;
  out.params["selected_views"] = static_cast<double>(selected.size());
  return out;
}

}  // namespace

void SnfParams::validate() const {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "SNF k must be >= 1");
  if (iters < 1) throw Error(ErrorCode::kInvalidArgument, "SNF iters must be >= 1");
  if (!(c1 > 0.0 && c1 <= 1.0) || !(c2 > 0.0 && c2 <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "SNF-H thresholds must lie in (0,1]");
  }
}

ParamMap SnfParams::to_params() const {
  return {{"k", static_cast<double>(k)},
          {"iters", static_cast<double>(iters)},
          {"alpha", alpha},
          {"c1", c1},
          {"c2", c2},
          {"normalization", static_cast<double>(normalization)}};
}

Matrix snf_normalize(const Matrix& s, SnfNormalization mode) {
  const int n = static_cast<int>(s.rows());
  if (s.cols() != n) throw Error(ErrorCode::kShapeMismatch, "snf_normalize needs a square matrix");
  Matrix p(n, n);
  if (n == 1) {
    p(0, 0) = 0.5;
    return p;
  }
  const double uniform = 0.5 / (n - 1);
  std::vector<double> col_sum(n, 0.0), row_sum(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      col_sum[j] += s(i, j);
      row_sum[i] += s(i, j);
    }
  }
  if (mode == SnfNormalization::kRowOffDiagonal) {
    for (int i = 0; i < n; ++i) {
      const double denom = 2.0 * (row_sum[i] - s(i, i));
      if (!(denom > 0.0)) {
        warn("snf_normalize: row " + std::to_string(i) + " has no off-diagonal mass; using uniform");
      }
      for (int j = 0; j < n; ++j) {
        p(i, j) = i == j ? 0.5 : (denom > 0.0 ? s(i, j) / denom : uniform);
      }
    }
    return p;
  }
  for (int j = 0; j < n; ++j) {
    bool degenerate = false;
    for (int i = 0; i < n && !degenerate; ++i) {
      if (i == j) continue;
      const double denom = mode == SnfNormalization::kAsPrinted
                               ? col_sum[j] - s(i, j)
                               : col_sum[j] - s(j, j);
      degenerate = !(denom > 0.0);
    }
    if (degenerate) {
      warn("snf_normalize: column " + std::to_string(j) + " is degenerate; using uniform");
    }
    for (int i = 0; i < n; ++i) {
      if (i == j) {
        p(i, j) = 0.5;
      } else if (degenerate) {
        p(i, j) = uniform;
      } else {
        const double denom = mode == SnfNormalization::kAsPrinted
                                 ? col_sum[j] - s(i, j)
                                 : col_sum[j] - s(j, j);
        p(i, j) = s(i, j) / (2.0 * denom);
      }
    }
  }
  return p;
}

Matrix snf_local_affinity(const Matrix& s, int k) {
  const int n = static_cast<int>(s.rows());
  if (s.cols() != n) throw Error(ErrorCode::kShapeMismatch, "snf_local_affinity needs a square matrix");
  Matrix q = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const NeighborList nn = knn_of(row_span(s, i), i, k);
    double denom = 0.0;
    for (double v : nn.similarities) denom += v;
    if (denom > 0.0) {
      for (int r = 0; r < nn.size(); ++r) q(i, nn.indices[r]) = nn.similarities[r] / denom;
    } else {
      warn("snf_local_affinity: row " + std::to_string(i) + " has an all-zero neighbourhood");
      for (int r = 0; r < nn.size(); ++r) q(i, nn.indices[r]) = 1.0 / nn.size();
    }
  }
  return q;
}

FusedSimilarity snf_fuse(std::span<const SimilarityView> views,
                         const SnfParams& params) {
  params.validate();
  if (views.size() < 2) {
    throw Error(ErrorCode::kTooFewViews, "SNF needs at least two views");
  }
  require_square_views(views);
  const int m = static_cast<int>(views.size());
  const auto n = views.front().matrix.rows();

  std::vector<Matrix> p(m), q(m);
  parallel_for(m, [&](int h) {
    p[h] = snf_normalize(views[h].matrix, params.normalization);
    q[h] = snf_local_affinity(views[h].matrix, params.k);
  });
  for (int t = 0; t < params.iters; ++t) {
    std::vector<Matrix> next(m);
    parallel_for(m, [&](int h) {
      Matrix others = Matrix::Zero(n, n);
      for (int i = 0; i < m; ++i) {
        if (i != h) others += p[i];
      }
      others /= static_cast<double>(m - 1);
      Matrix left = q[h] * others;
      next[h].noalias() = left * q[h].transpose();
    });
    p = std::move(next);
  }
  FusedSimilarity out;
  out.method = Method::kSnf;
  out.params = params.to_params();
  out.matrix = Matrix::Zero(n, n);
  for (int h = 0; h < m; ++h) out.matrix += p[h];
  out.matrix /= static_cast<double>(m);
  return out;
}

double view_entropy(const Matrix& s) {
  const int n = static_cast<int>(s.rows());
  if (n < 2) return 0.0;
  const double log_n = std::log(static_cast<double>(n));
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < s.cols(); ++j) row += s(i, j);
    if (!(row > 0.0)) {
      total += 1.0;
      continue;
    }
    double h = 0.0;
    for (int j = 0; j < s.cols(); ++j) {
      const double p = s(i, j) / row;
      if (p > 0.0) h -= p * std::log(p);
    }
    total += h / log_n;
  }
  return total / n;
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw Error(ErrorCode::kInvalidArgument, "quantile of no values");
  std::sort(values.begin(), values.end());
  const double pos = std::clamp(q, 0.0, 1.0) * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const double frac = pos - static_cast<double>(lo);
  if (lo + 1 >= values.size()) return values.back();
  return values[lo] + frac * (values[lo + 1] - values[lo]);
}

std::vector<int> snfh_select(std::span<const SimilarityView> views,
                             const SnfParams& params) {
  params.validate();
  require_square_views(views);
  const int m = static_cast<int>(views.size());
  std::vector<double> entropy(m);
  for (int h = 0; h < m; ++h) entropy[h] = view_entropy(views[h].matrix);

  const double entropy_cut = quantile(entropy, params.c1);
  std::vector<int> kept;
  for (int h = 0; h < m; ++h) {
    if (!(entropy[h] > entropy_cut)) kept.push_back(h);
  }

  std::vector<std::tuple<double, int, int>> pairs;
  for (std::size_t a = 0; a < kept.size(); ++a) {
    for (std::size_t b = a + 1; b < kept.size(); ++b) {
      const double d = (views[kept[a]].matrix - views[kept[b]].matrix).norm();
      pairs.emplace_back(d, kept[a], kept[b]);
    }
  }
  if (pairs.empty()) return kept;

  std::vector<double> distances;
  for (const auto& pr : pairs) distances.push_back(std::get<0>(pr));
  const double redundancy_cut = quantile(distances, params.c2);
  std::sort(pairs.begin(), pairs.end());

  std::vector<bool> alive(m, false);
  for (int h : kept) alive[h] = true;
  for (const auto& [d, a, b] : pairs) {
    if (!alive[a] || !alive[b]) continue;
    if (d == 0.0 || d < redundancy_cut) {
      const int drop = entropy[a] > entropy[b] ? a : b;
      alive[drop] = false;
    }
  }
  std::vector<int> selected;
  for (int h : kept) {
    if (alive[h]) selected.push_back(h);
  }
  return selected;
}

FusedSimilarity snfh_fuse(std::span<const SimilarityView> views,
                          const SnfParams& params) {
  return fuse_selected(views, snfh_select(views, params), params, Method::kSnfH);
}

double snff_inner_aupr(const Matrix& similarity, const Matrix& y,
                       const ForwardSelectionOptions& options) {
  if (!options.model_factory) {
    throw Error(ErrorCode::kInvalidArgument, "SNF-F needs a base model factory");
  }
  const int n = static_cast<int>(y.rows());
  const int nt = static_cast<int>(y.cols());
  const CvPlan plan = make_cv_plan(n, nt, CvSetting::kCvsP, options.inner_folds, options.seed);
  double total = 0.0;
  int evaluated = 0;
  for (int block = 0; block < plan.num_blocks(); ++block) {
    const Matrix y_train = training_interactions(plan, block, y);
    auto model = options.model_factory();
    model->fit(similarity, options.other_side, y_train);
    const std::vector<EntityPair> pairs = test_pairs(plan, block);
    const std::vector<double> scores = model->predict(pairs);
    std::vector<double> labels;
    labels.reserve(pairs.size());
    bool any_positive = false;
    for (const auto& pr : pairs) {
      labels.push_back(y(pr.drug, pr.target));
      any_positive = any_positive || labels.back() > 0.5;
    }
    if (!any_positive) continue;
    total += aupr(scores, labels);
    ++evaluated;
  }
  return evaluated > 0 ? total / evaluated : 0.0;
}

std::vector<int> snff_select(std::span<const SimilarityView> views,
                             const Matrix& y, const SnfParams& params,
                             const ForwardSelectionOptions& options) {
  params.validate();
  require_square_views(views);
  const int m = static_cast<int>(views.size());
  if (y.rows() != views.front().matrix.rows()) {
    throw Error(ErrorCode::kShapeMismatch, "interaction rows do not match view size");
  }
  if (options.other_side.rows() != y.cols() || options.other_side.cols() != y.cols()) {
    throw Error(ErrorCode::kShapeMismatch, "other-side similarity does not match interaction columns");
  }
  std::vector<int> selected;
  std::vector<bool> used(m, false);
  double best = -std::numeric_limits<double>::infinity();
  while (static_cast<int>(selected.size()) < m) {
    std::vector<int> candidates;
    for (int h = 0; h < m; ++h) {
      if (!used[h]) candidates.push_back(h);
    }
    std::vector<double> score(candidates.size());
    parallel_for(static_cast<int>(candidates.size()), [&](int c) {
      std::vector<int> trial = selected;
      trial.push_back(candidates[c]);
      const Matrix fused = trial.size() == 1
                               ? views[trial.front()].matrix
                               : snf_fuse(subset(views, trial), params).matrix;
      score[c] = snff_inner_aupr(fused, y, options);
    });
    std::size_t pick = 0;
    for (std::size_t c = 1; c < candidates.size(); ++c) {
      if (score[c] > score[pick]) pick = c;
    }
    if (!(score[pick] > best)) break;
    best = score[pick];
    selected.push_back(candidates[pick]);
    used[candidates[pick]] = true;
  }
  return selected;
}

FusedSimilarity snff_fuse(std::span<const SimilarityView> views,
                          const Matrix& y, const SnfParams& params,
                          const ForwardSelectionOptions& options) {
  return fuse_selected(views, snff_select(views, y, params, options), params, Method::kSnfF);
}

}  // namespace simfuse
