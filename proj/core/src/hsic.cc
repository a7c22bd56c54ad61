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
#include "simfuse/hsic.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "simfuse/errors.h"
#include "simfuse/linear.h"

namespace simfuse {
namespace {

struct AscentRun {
  Vector w;
  double objective = 0.0;
  int iterations = 0;
  std::vector<double> trace;
};

double checked_objective(const HsicProblem& problem, const Vector& w) {
  const double f = problem.objective(w);
  if (!std::isfinite(f)) {
    throw Error(ErrorCode::kNonFinite, "HSIC objective is not finite");
  }
  return f;
}

AscentRun ascend(const HsicProblem& problem, Vector w, double step,
                 int max_iters, double tol) {
  AscentRun run;
  run.objective = checked_objective(problem, w);
  run.trace.push_back(run.objective);
  for (int it = 0; it < max_iters; ++it) {
    const Vector g = problem.gradient(w);
    Vector candidate = project_to_simplex(w + step * g);
    double f = checked_objective(problem, candidate);
    int halvings = 0;
    while (f < run.objective && halvings < 60) {
      step *= 0.5;
      candidate = project_to_simplex(w + step * g);
      f = checked_objective(problem, candidate);
      ++halvings;
    }
    if (f < run.objective) break;
    const double change = f - run.objective;
    w = std::move(candidate);
    run.objective = f;
    run.trace.push_back(f);
    run.iterations = it + 1;
    if (change < tol) break;
  }
  run.w = std::move(w);
  return run;
}

}  // namespace

double HsicProblem::objective(const Vector& w) const {
  return dependence.dot(w) + lambda1 * w.dot(laplacian * w) +
         lambda2 * w.squaredNorm();
}

Vector HsicProblem::gradient(const Vector& w) const {
  return dependence + lambda1 * (laplacian + laplacian.transpose()) * w +
         2.0 * lambda2 * w;
}

Vector project_to_simplex(const Vector& v) {
  const int m = static_cast<int>(v.size());
  if (m == 0) return v;
  std::vector<double> u(v.data(), v.data() + m);
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (int j = 0; j < m; ++j) {
    cumulative += u[j];
    const double t = (cumulative - 1.0) / (j + 1);
    if (u[j] - t > 0.0) theta = t;
  }
  Vector w = (v.array() - theta).max(0.0).matrix();
  const double total = w.sum();
  if (total > 0.0) w /= total;
  return w;
}

HsicProblem make_hsic_problem(std::span<const SimilarityView> views,
                              const Matrix& y, double lambda1,
                              double lambda2) {
  if (views.empty()) throw Error(ErrorCode::kInvalidArgument, "no views given");
  if (lambda1 < 0.0 || lambda2 < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "HSIC lambdas must be >= 0");
  }
  const int n = static_cast<int>(views.front().matrix.rows());
  if (y.rows() != n) {
    throw Error(ErrorCode::kShapeMismatch, "interaction rows do not match view size");
  }
  const int m = static_cast<int>(views.size());

  // H Z H without forming H.
  const Matrix z = ideal_similarity(y);
  const Vector row_mean = z.rowwise().mean();
  const Eigen::RowVectorXd col_mean = z.colwise().mean();
  const double grand = z.mean();
  Matrix centered = z;
  centered.colwise() -= row_mean;
  centered.rowwise() -= col_mean;
  centered.array() += grand;

  HsicProblem problem;
  problem.lambda1 = lambda1;
  problem.lambda2 = lambda2;
  problem.dependence.resize(m);
  const double n2 = static_cast<double>(n) * n;
  for (int h = 0; h < m; ++h) {
    const Matrix& s = views[h].matrix;
    if (s.rows() != n || s.cols() != n) {
      throw Error(ErrorCode::kShapeMismatch, "view '" + views[h].label + "' has the wrong shape");
    }
    // tr(S M) = sum_ij S(i,j) M(j,i)
    problem.dependence[h] = s.cwiseProduct(centered.transpose()).sum() / n2;
  }
  Matrix u(m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      u(a, b) = u(b, a) = kernel_alignment(views[a].matrix, views[b].matrix);
    }
  }
  problem.laplacian = -u;
  problem.laplacian.diagonal() += u.rowwise().sum();
  return problem;
}

HsicResult solve_hsic(const HsicProblem& problem, int max_iters, double tol) {
  const int m = problem.num_views();
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "no views given");
  if (max_iters < 0) throw Error(ErrorCode::kInvalidArgument, "max_iters must be >= 0");

  Matrix curvature = problem.lambda1 * (problem.laplacian + problem.laplacian.transpose());
  curvature.diagonal().array() += 2.0 * problem.lambda2;
  const double lipschitz = curvature.norm();
  const double step = lipschitz > 0.0 ? 1.0 / lipschitz : 1.0;

  std::vector<Vector> starts;
  starts.push_back(Vector::Constant(m, 1.0 / m));
  if (m > 1) {
    for (int h = 0; h < m; ++h) starts.push_back(Vector::Unit(m, h));
  }

  AscentRun best;
  bool have_best = false;
  for (const Vector& start : starts) {
    AscentRun run = ascend(problem, start, step, max_iters, tol);
    const double margin = 1e-12 * std::max(1.0, std::abs(best.objective));
    if (!have_best || run.objective > best.objective + margin) {
      best = std::move(run);
      have_best = true;
    }
  }
  HsicResult result;
  result.weights = std::move(best.w);
  result.objective = best.objective;
  result.iterations = best.iterations;
  result.trace = std::move(best.trace);
  return result;
}

GlobalWeights hsic_weights(std::span<const SimilarityView> views,
                           const Matrix& y, const HsicOptions& options) {
  const HsicProblem problem =
      make_hsic_problem(views, y, options.lambda1, options.lambda2);
  HsicResult result = solve_hsic(problem, options.max_iters, options.tol);
  return {std::move(result.weights), Method::kHsic};
}

}  // namespace simfuse
