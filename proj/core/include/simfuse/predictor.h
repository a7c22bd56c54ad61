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
#ifndef SIMFUSE_PREDICTOR_H_
#define SIMFUSE_PREDICTOR_H_

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "simfuse/knn.h"
#include "simfuse/types.h"

namespace simfuse {

/// A DTI model trained on one fused drug similarity, one fused target
/// similarity and the training interactions. predict() must be
/// deterministic after fit() and return finite scores.
class BaseModel {
 public:
  virtual ~BaseModel() = default;

  virtual void fit(const Matrix& drug_similarity,
                   const Matrix& target_similarity,
                   const Matrix& y_train) = 0;
  virtual std::vector<double> predict(
      std::span<const EntityPair> pairs) const = 0;
  virtual std::string name() const = 0;
  virtual ParamMap params() const { return {}; }
};

using BaseModelFactory = std::function<std::unique_ptr<BaseModel>()>;

struct NeighborhoodParams {
  int k = 5;
  double eta = 0.7;
};

enum class PairMode { kKnownPair, kNewDrug, kNewTarget, kNewBoth };

/// Weighted k-nearest-neighbour interaction-profile model. The r-th nearest
/// known neighbour (r = 1..k) of an entity gets weight eta^(r-1) * s, where
/// s is its similarity to the entity.
///
///   NewDrug    sum_r a_r Y(n_r, t) / sum_r a_r over known drugs n_r
///   NewTarget  the same over known targets
///   NewBoth    sum_rs a_r b_s Y(n_r, m_s) / (sum_r a_r sum_s b_s)
///   KnownPair  mean of the drug-side and target-side estimates
///
/// Neighbours never include the entity itself. A zero denominator scores 0.
class NeighborhoodPredictor : public BaseModel {
 public:
  explicit NeighborhoodPredictor(NeighborhoodParams params = {});

  void fit(const Matrix& drug_similarity, const Matrix& target_similarity,
           const Matrix& y_train) override;
  std::vector<double> predict(
      std::span<const EntityPair> pairs) const override;
  std::string name() const override { return "neighborhood"; }
  ParamMap params() const override;

  // Derived from which rows/columns of y_train are all zero.
  PairMode mode_of(int drug, int target) const;
  double predict_pair(int drug, int target, PairMode mode) const;
  double predict_pair(int drug, int target) const;
  // Row-major block, drugs.size() x targets.size().
  Matrix score_matrix(std::span<const int> drugs,
                      std::span<const int> targets) const;

 private:
  void require_fitted() const;
  double drug_side(int drug, int target) const;
  double target_side(int drug, int target) const;
  double both_sides(int drug, int target) const;

  NeighborhoodParams params_;
  bool fitted_ = false;
  Matrix y_;
  std::vector<bool> known_drug_;
  std::vector<bool> known_target_;
  // Per entity: decayed neighbour weights over the known entities.
  std::vector<NeighborList> drug_neighbors_;
  std::vector<NeighborList> target_neighbors_;
};

BaseModelFactory neighborhood_factory(NeighborhoodParams params = {});

}  // namespace simfuse

#endif  // SIMFUSE_PREDICTOR_H_
