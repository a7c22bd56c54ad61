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
#include "simfuse/fgs.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "simfuse/errors.h"
#include "simfuse/knn.h"
#include "simfuse/logging.h"
#include "simfuse/parallel.h"
#include "simfuse/validation.h"

namespace simfuse {
namespace {

void require_side(std::span<const SimilarityView> views, const Matrix& y) {
  if (views.empty()) throw Error(ErrorCode::kInvalidArgument, "no views given");
  const auto n = views.front().matrix.rows();
  for (const auto& v : views) {
    if (v.matrix.rows() != n || v.matrix.cols() != n) {
      throw Error(ErrorCode::kShapeMismatch, "view '" + v.label + "' has the wrong shape");
    }
  }
  if (y.rows() != n) {
    throw Error(ErrorCode::kShapeMismatch, "interaction rows do not match view size");
  }
}

bool row_is_zero(const Matrix& w, int i) {
  for (int h = 0; h < w.cols(); ++h) {
    if (w(i, h) != 0.0) return false;
  }
  return true;
}

bool all_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

}  // namespace

void FgsParams::validate() const {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "FGS k must be >= 1");
  if (!(rho >= 0.0 && rho < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "FGS rho must lie in [0,1)");
  }
}

ParamMap FgsParams::to_params() const {
  return {{"k", static_cast<double>(k)},
          {"rho", rho},
          {"reading", static_cast<double>(reading)}};
}

WeightMatrix fgs_init_weights(std::span<const SimilarityView> views,
                              const Matrix& y, int k,
                              ConsistencyReading reading) {
  require_side(views, y);
  const int n = static_cast<int>(y.rows());
  const int m = static_cast<int>(views.size());
  WeightMatrix w{Matrix::Zero(n, m), views.front().kind};
  parallel_for(m, [&](int h) {
    const Matrix c = lic_consistency_matrix(views[h].matrix, y, k, reading);
    for (int i = 0; i < n; ++i) {
      double total = 0.0;
      for (int j = 0; j < y.cols(); ++j) total += c(i, j) * y(i, j);
      w.matrix(i, h) = total;
    }
  });
  return w;
}

Vector fgs_global_vector(const WeightMatrix& w) {
  Vector v = Vector::Zero(w.matrix.cols());
  for (int i = 0; i < w.matrix.rows(); ++i) {
    for (int h = 0; h < w.matrix.cols(); ++h) v[h] += w.matrix(i, h);
  }
  return v;
}

WeightMatrix fgs_complete_zero_rows(const WeightMatrix& w,
                                    std::span<const int> known_set) {
  WeightMatrix out = w;
  Vector v = fgs_global_vector(w);
  bool fallback_used = false;
  for (int i : known_set) {
    if (!row_is_zero(w.matrix, i)) continue;
    if (all_zero(v)) {
      fallback_used = true;
      out.matrix.row(i).setOnes();
    } else {
      out.matrix.row(i) = v.transpose();
    }
  }
  if (fallback_used) {
    warn("FGS: global weight vector is all zero; zero rows set to uniform weights");
  }
  return out;
}

WeightMatrix fgs_infer_new_entity_weights(const WeightMatrix& w,
                                          std::span<const SimilarityView> views,
                                          std::span<const int> new_set,
                                          std::span<const int> known_set, int k,
                                          const Vector* fallback) {
  if (new_set.empty()) return w;
  if (known_set.empty()) {
    throw Error(ErrorCode::kNoKnownEntities, "cannot infer weights without known entities");
  }
  const int m = static_cast<int>(w.matrix.cols());
  if (static_cast<int>(views.size()) != m) {
    throw Error(ErrorCode::kShapeMismatch, "weight columns differ from view count");
  }
  Vector backup;
  if (fallback != nullptr) {
    backup = *fallback;
  } else {
    backup = Vector::Zero(m);
    for (int i : known_set) backup += w.matrix.row(i).transpose();
  }
  if (all_zero(backup)) backup = Vector::Ones(m);

  WeightMatrix out = w;
  int fallbacks = 0;
  for (int x : new_set) {
    for (int h = 0; h < m; ++h) {
      const NeighborList nn = knn_of(views[h], x, k, known_set);
      double total = 0.0;
      for (int l : nn.indices) total += w.matrix(l, h);
      out.matrix(x, h) = total;
    }
    if (row_is_zero(out.matrix, x)) {
      out.matrix.row(x) = backup.transpose();
      ++fallbacks;
    }
  }
  if (fallbacks > 0) {
    warn("FGS: " + std::to_string(fallbacks) +
         " new entities inferred all-zero weights; global vector used");
  }
  return out;
}

int fgs_selection_count(int num_views, double rho) {
  const int count = static_cast<int>(std::floor(rho * num_views + 1e-9));
  return std::clamp(count, 0, std::max(0, num_views - 1));
}

WeightMatrix fgs_select(const WeightMatrix& w, double rho) {
  if (!(rho >= 0.0 && rho < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "FGS rho must lie in [0,1)");
  }
  const int m = static_cast<int>(w.matrix.cols());
  const int drop = fgs_selection_count(m, rho);
  WeightMatrix out = w;
  if (drop == 0) return out;
  std::vector<int> order(m);
  for (int i = 0; i < w.matrix.rows(); ++i) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return w.matrix(i, a) < w.matrix(i, b);
    });
    for (int r = 0; r < drop; ++r) out.matrix(i, order[r]) = 0.0;
  }
  return out;
}

WeightMatrix fgs_normalize(const WeightMatrix& w) {
  WeightMatrix out = w;
  for (int i = 0; i < w.matrix.rows(); ++i) {
    double total = 0.0;
    for (int h = 0; h < w.matrix.cols(); ++h) total += w.matrix(i, h);
    if (!(total > 0.0)) {
      throw Error(ErrorCode::kZeroRow, "weight row " + std::to_string(i) + " has no positive mass");
    }
    for (int h = 0; h < w.matrix.cols(); ++h) out.matrix(i, h) = w.matrix(i, h) / total;
  }
  return out;
}

Matrix fuse_rows(std::span<const SimilarityView> views, const Matrix& w) {
  if (views.empty()) throw Error(ErrorCode::kInvalidArgument, "no views given");
  const auto n = views.front().matrix.rows();
  const auto cols = views.front().matrix.cols();
  if (w.rows() != n || w.cols() != static_cast<Eigen::Index>(views.size())) {
    throw Error(ErrorCode::kShapeMismatch, "weight matrix does not match the views");
  }
  Matrix out = Matrix::Zero(n, cols);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (std::size_t h = 0; h < views.size(); ++h) {
      const double weight = w(i, static_cast<Eigen::Index>(h));
      if (weight == 0.0) continue;
      out.row(i) += weight * views[h].matrix.row(i);
    }
  }
  return out;
}

WeightMatrix fgs_weights_from_init(const WeightMatrix& initial,
                                   std::span<const SimilarityView> views,
                                   const Matrix& y, const FgsParams& params) {
  params.validate();
  require_side(views, y);
  const std::vector<int> known = nonzero_rows(y);
  const std::vector<int> fresh = zero_rows(y);
  const Vector v = fgs_global_vector(initial);
  WeightMatrix w = fgs_complete_zero_rows(initial, known);
  w = fgs_infer_new_entity_weights(w, views, fresh, known, params.k, &v);
  w = fgs_select(w, params.rho);
  return fgs_normalize(w);
}

WeightMatrix fgs_weights(std::span<const SimilarityView> views,
                         const Matrix& y, const FgsParams& params) {
  params.validate();
  const WeightMatrix initial = fgs_init_weights(views, y, params.k, params.reading);
  return fgs_weights_from_init(initial, views, y, params);
}

FgsResult fgs_fuse(std::span<const SimilarityView> views, const Matrix& y,
                   const FgsParams& params) {
  FgsResult result;
  result.weights = fgs_weights(views, y, params);
  result.fused.matrix = fuse_rows(views, result.weights.matrix);
  result.fused.method = Method::kFgs;
  result.fused.params = params.to_params();
  return result;
}

}  // namespace simfuse
