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
#ifndef SIMFUSE_EXPERIMENT_H_
#define SIMFUSE_EXPERIMENT_H_

#include <string>
#include <vector>

#include "simfuse/cv.h"
#include "simfuse/integrate.h"
#include "simfuse/predictor.h"
#include "simfuse/types.h"

namespace simfuse {

struct BaseModelConfig {
  NeighborhoodParams neighborhood;
  // Overrides the built-in neighbourhood model when set.
  BaseModelFactory factory;

  BaseModelFactory make_factory() const;
};

struct FoldResult {
  int fold = 0;
  int num_test_pairs = 0;
  int num_positives = 0;
  // False when the test block lacks a positive or a negative label; such
  // folds carry NaN metrics and are left out of the means.
  bool evaluated = false;
  double aupr = 0.0;
  double auc = 0.0;
};

struct EvalReport {
  std::string integrator;
  ParamMap integrator_params;
  std::string base_model;
  ParamMap base_model_params;
  CvSetting setting = CvSetting::kCvsD;
  int folds = 0;
  std::uint64_t seed = 0;
  std::vector<FoldResult> fold_results;
  int evaluated_folds = 0;
  double mean_aupr = 0.0;
  double mean_auc = 0.0;
};

/// Scores of the block's test pairs (in test_pairs() order). Integration and
/// model fitting see only training_interactions(); test cells of
/// dataset.interactions are never read.
std::vector<double> fold_scores(const Dataset& dataset,
                                const IntegratorConfig& integrator,
                                const BaseModelConfig& base_model,
                                const CvPlan& plan, int block);

/// Runs every block (concurrently when threads allow) and assembles the
/// report in block order. A failing block raises kFoldFailed naming it.
EvalReport run_experiment(const Dataset& dataset,
                          const IntegratorConfig& integrator,
                          const BaseModelConfig& base_model,
                          const CvPlan& plan);

}  // namespace simfuse

#endif  // SIMFUSE_EXPERIMENT_H_
