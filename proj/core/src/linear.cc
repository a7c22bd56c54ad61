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
#include "simfuse/linear.h"

#include <cmath>
#include <string>
#include <vector>

#include "simfuse/errors.h"
#include "simfuse/knn.h"
#include "simfuse/parallel.h"

namespace simfuse {
namespace {

void require_views(std::span<const SimilarityView> views) {
  if (views.empty()) throw Error(ErrorCode::kInvalidArgument, "no views given");
  const auto rows = views.front().matrix.rows();
  for (const auto& v : views) {
    if (v.matrix.rows() != rows || v.matrix.cols() != rows) {
      throw Error(ErrorCode::kShapeMismatch,
                  "view '" + v.label + "' is not " + std::to_string(rows) +
                      "x" + std::to_string(rows));
    }
  }
}

void require_side(std::span<const SimilarityView> views, const Matrix& y) {
  require_views(views);
  if (y.rows() != views.front().matrix.rows()) {
    throw Error(ErrorCode::kShapeMismatch,
                "interaction rows do not match view size");
  }
}

}  // namespace

bool is_simplex(const Vector& w, double tol) {
  if (w.size() == 0) return false;
  for (double v : w) {
    if (!(v >= 0.0)) return false;
  }
  return std::abs(w.sum() - 1.0) <= tol;
}

FusedSimilarity fuse_linear(std::span<const SimilarityView> views,
                            const GlobalWeights& weights) {
  require_views(views);
  if (static_cast<std::size_t>(weights.weights.size()) != views.size()) {
    throw Error(ErrorCode::kShapeMismatch, "weight count differs from view count");
  }
  FusedSimilarity out;
  out.method = weights.method;
  out.matrix = Matrix::Zero(views.front().matrix.rows(), views.front().matrix.cols());
  for (std::size_t h = 0; h < views.size(); ++h) {
    out.matrix += weights.weights[h] * views[h].matrix;
  }
  for (std::size_t h = 0; h < views.size(); ++h) {
    out.params["w" + std::to_string(h)] = weights.weights[h];
  }
  return out;
}

GlobalWeights ave_weights(int num_views) {
  if (num_views < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one view");
  return {Vector::Constant(num_views, 1.0 / num_views), Method::kAve};
}

Matrix ideal_similarity(const Matrix& y) { return y * y.transpose(); }

double kernel_alignment(const Matrix& a, const Matrix& z) {
  if (a.rows() != z.rows() || a.cols() != z.cols()) {
    throw Error(ErrorCode::kShapeMismatch, "alignment operands differ in shape");
  }
  const double aa = a.cwiseProduct(a).sum();
  const double zz = z.cwiseProduct(z).sum();
  if (aa == 0.0 || zz == 0.0) {
    throw Error(ErrorCode::kDegenerateInput, "alignment with an all-zero matrix");
  }
  return a.cwiseProduct(z).sum() / std::sqrt(aa * zz);
}

GlobalWeights ka_weights(std::span<const SimilarityView> views,
                         const Matrix& y) {
  require_side(views, y);
  const Matrix z = ideal_similarity(y);
  Vector alignment(views.size());
  for (std::size_t h = 0; h < views.size(); ++h) {
    alignment[h] = kernel_alignment(views[h].matrix, z);
  }
  const double total = alignment.sum();
  if (!(total > 0.0)) {
    throw Error(ErrorCode::kAllZeroAlignment, "every view has zero alignment");
  }
  return {alignment / total, Method::kKa};
}

Matrix lic_consistency_matrix(const Matrix& similarity, const Matrix& y, int k,
                              ConsistencyReading reading) {
  const int n = static_cast<int>(similarity.rows());
  const int nt = static_cast<int>(y.cols());
  if (similarity.cols() != n || y.rows() != n) {
    throw Error(ErrorCode::kShapeMismatch, "consistency operands differ in shape");
  }
  if (reading == ConsistencyReading::kLiteral && nt < n) {
    throw Error(ErrorCode::kInvalidArgument,
                "literal consistency reading needs at least as many columns as rows");
  }
  Matrix c = Matrix::Zero(n, nt);
  std::vector<double> agree(nt);
  for (int i = 0; i < n; ++i) {
    const NeighborList nn = knn_of(row_span(similarity, i), i, k);
    double denom = 0.0;
    for (double s : nn.similarities) denom += s;
    if (denom == 0.0) continue;
    std::fill(agree.begin(), agree.end(), 0.0);
    const double* yi = y.data() + static_cast<std::ptrdiff_t>(i) * nt;
    for (int r = 0; r < nn.size(); ++r) {
      const int l = nn.indices[r];
      const double s = nn.similarities[r];
      if (reading == ConsistencyReading::kNeighborSameTarget) {
        const double* yl = y.data() + static_cast<std::ptrdiff_t>(l) * nt;
        for (int j = 0; j < nt; ++j) {
          if (yl[j] == yi[j]) agree[j] += s;
        }
      } else {
        const double label = yi[l];
        for (int j = 0; j < nt; ++j) {
          if (label == yi[j]) agree[j] += s;
        }
      }
    }
    for (int j = 0; j < nt; ++j) c(i, j) = agree[j] / denom;
  }
  return c;
}

Vector lic_view_consistency(std::span<const SimilarityView> views,
                            const Matrix& y, int k,
                            ConsistencyReading reading) {
  require_side(views, y);
  const double positives = static_cast<double>((y.array() == 1.0).count());
  if (positives == 0.0) {
    throw Error(ErrorCode::kNoInteractions, "interaction matrix has no ones");
  }
  Vector c(views.size());
  parallel_for(static_cast<int>(views.size()), [&](int h) {
    const Matrix consistency = lic_consistency_matrix(views[h].matrix, y, k, reading);
    double total = 0.0;
    for (int i = 0; i < y.rows(); ++i) {
      for (int j = 0; j < y.cols(); ++j) {
        if (y(i, j) == 1.0) total += consistency(i, j);
      }
    }
    c[h] = total / positives;
  });
  return c;
}

GlobalWeights lic_weights(std::span<const SimilarityView> views,
                          const Matrix& y, int k, ConsistencyReading reading) {
  const Vector c = lic_view_consistency(views, y, k, reading);
  const double total = c.sum();
  if (!(total > 0.0)) {
    throw Error(ErrorCode::kDegenerateInput, "every view has zero consistency");
  }
  return {c / total, Method::kLic};
}

}  // namespace simfuse
