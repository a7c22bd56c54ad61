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
#include "simfuse/predictor.h"

#include <cmath>
#include <string>

#include "simfuse/errors.h"

namespace simfuse {
namespace {

std::vector<NeighborList> decayed_neighbors(const Matrix& similarity,
                                            const std::vector<bool>& known,
                                            int k, double eta) {
  const int n = static_cast<int>(similarity.rows());
  std::vector<int> pool;
  for (int i = 0; i < n; ++i) {
    if (known[i]) pool.push_back(i);
  }
  std::vector<NeighborList> out(n);
  for (int i = 0; i < n; ++i) {
    const bool only_self = pool.empty() || (pool.size() == 1 && pool.front() == i);
    if (only_self) continue;
    NeighborList nn = knn_of(row_span(similarity, i), i, k, pool);
    double decay = 1.0;
    for (double& s : nn.similarities) {
      s *= decay;
      decay *= eta;
    }
    out[i] = std::move(nn);
  }
  return out;
}

}  // namespace

NeighborhoodPredictor::NeighborhoodPredictor(NeighborhoodParams params)
    : params_(params) {
  if (params_.k < 1) throw Error(ErrorCode::kInvalidArgument, "predictor k must be >= 1");
  if (!(params_.eta > 0.0 && params_.eta <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "predictor eta must lie in (0,1]");
  }
}

ParamMap NeighborhoodPredictor::params() const {
  return {{"k", static_cast<double>(params_.k)}, {"eta", params_.eta}};
}

void NeighborhoodPredictor::fit(const Matrix& drug_similarity,
                                const Matrix& target_similarity,
                                const Matrix& y_train) {
  const auto nd = y_train.rows();
  const auto nt = y_train.cols();
  if (drug_similarity.rows() != nd || drug_similarity.cols() != nd ||
      target_similarity.rows() != nt || target_similarity.cols() != nt) {
    throw Error(ErrorCode::kShapeMismatch, "similarities do not match the interaction matrix");
  }
  y_ = y_train;
  known_drug_.assign(nd, false);
  known_target_.assign(nt, false);
  for (Eigen::Index i = 0; i < nd; ++i) {
    for (Eigen::Index j = 0; j < nt; ++j) {
      if (y_(i, j) != 0.0) {
        known_drug_[i] = true;
        known_target_[j] = true;
      }
    }
  }
  drug_neighbors_ = decayed_neighbors(drug_similarity, known_drug_, params_.k, params_.eta);
  target_neighbors_ = decayed_neighbors(target_similarity, known_target_, params_.k, params_.eta);
  fitted_ = true;
}

void NeighborhoodPredictor::require_fitted() const {
  if (!fitted_) throw Error(ErrorCode::kInvalidArgument, "predictor used before fit()");
}

PairMode NeighborhoodPredictor::mode_of(int drug, int target) const {
  require_fitted();
  const bool d = known_drug_.at(drug);
  const bool t = known_target_.at(target);
  if (d && t) return PairMode::kKnownPair;
  if (!d && t) return PairMode::kNewDrug;
  if (d && !t) return PairMode::kNewTarget;
  return PairMode::kNewBoth;
}

double NeighborhoodPredictor::drug_side(int drug, int target) const {
  const NeighborList& nn = drug_neighbors_[drug];
  double num = 0.0, den = 0.0;
  for (int r = 0; r < nn.size(); ++r) {
    num += nn.similarities[r] * y_(nn.indices[r], target);
    den += nn.similarities[r];
  }
  return den > 0.0 ? num / den : 0.0;
}

double NeighborhoodPredictor::target_side(int drug, int target) const {
  const NeighborList& nn = target_neighbors_[target];
  double num = 0.0, den = 0.0;
  for (int r = 0; r < nn.size(); ++r) {
    num += nn.similarities[r] * y_(drug, nn.indices[r]);
    den += nn.similarities[r];
  }
  return den > 0.0 ? num / den : 0.0;
}

double NeighborhoodPredictor::both_sides(int drug, int target) const {
  const NeighborList& dn = drug_neighbors_[drug];
  const NeighborList& tn = target_neighbors_[target];
  double num = 0.0, da = 0.0, db = 0.0;
  for (int r = 0; r < dn.size(); ++r) da += dn.similarities[r];
  for (int s = 0; s < tn.size(); ++s) db += tn.similarities[s];
  for (int r = 0; r < dn.size(); ++r) {
    for (int s = 0; s < tn.size(); ++s) {
      num += dn.similarities[r] * tn.similarities[s] * y_(dn.indices[r], tn.indices[s]);
    }
  }
  const double den = da * db;
  return den > 0.0 ? num / den : 0.0;
}

double NeighborhoodPredictor::predict_pair(int drug, int target,
                                           PairMode mode) const {
  require_fitted();
  if (drug < 0 || drug >= y_.rows() || target < 0 || target >= y_.cols()) {
    throw Error(ErrorCode::kInvalidArgument, "pair index out of range");
  }
  switch (mode) {
    case PairMode::kKnownPair:
      return 0.5 * (drug_side(drug, target) + target_side(drug, target));
    case PairMode::kNewDrug:
      return drug_side(drug, target);
    case PairMode::kNewTarget:
      return target_side(drug, target);
    case PairMode::kNewBoth:
      return both_sides(drug, target);
  }
  return 0.0;
}

double NeighborhoodPredictor::predict_pair(int drug, int target) const {
  return predict_pair(drug, target, mode_of(drug, target));
}

std::vector<double> NeighborhoodPredictor::predict(
    std::span<const EntityPair> pairs) const {
  std::vector<double> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(predict_pair(p.drug, p.target));
  return out;
}

Matrix NeighborhoodPredictor::score_matrix(std::span<const int> drugs,
                                           std::span<const int> targets) const {
  Matrix out(drugs.size(), targets.size());
  for (std::size_t a = 0; a < drugs.size(); ++a) {
    for (std::size_t b = 0; b < targets.size(); ++b) {
      out(a, b) = predict_pair(drugs[a], targets[b]);
    }
  }
  return out;
}

BaseModelFactory neighborhood_factory(NeighborhoodParams params) {
  return [params]() { return std::make_unique<NeighborhoodPredictor>(params); };
}

}  // namespace simfuse
