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
#include "simfuse/experiment.h"

#include <cmath>
#include <limits>
#include <string>

#include "simfuse/errors.h"
#include "simfuse/metrics.h"
#include "simfuse/parallel.h"

namespace simfuse {

BaseModelFactory BaseModelConfig::make_factory() const {
  return factory ? factory : neighborhood_factory(neighborhood);
}

std::vector<double> fold_scores(const Dataset& dataset,
                                const IntegratorConfig& integrator,
                                const BaseModelConfig& base_model,
                                const CvPlan& plan, int block) {
  const Matrix y_train = training_interactions(plan, block, dataset.interactions.matrix);
  const Matrix yt_train = y_train.transpose();
  const BaseModelFactory factory = base_model.make_factory();
  const SideIntegration drugs = integrate_side(dataset.drug_views, dataset.target_views,
                                               y_train, integrator, factory);
  const SideIntegration targets = integrate_side(dataset.target_views, dataset.drug_views,
                                                 yt_train, integrator, factory);
  auto model = factory();
  model->fit(drugs.fused.matrix, targets.fused.matrix, y_train);
  const std::vector<EntityPair> pairs = test_pairs(plan, block);
  return model->predict(pairs);
}

EvalReport run_experiment(const Dataset& dataset,
                          const IntegratorConfig& integrator,
                          const BaseModelConfig& base_model,
                          const CvPlan& plan) {
  if (plan.num_drugs != dataset.num_drugs() || plan.num_targets != dataset.num_targets()) {
    throw Error(ErrorCode::kShapeMismatch, "plan does not match the dataset");
  }
  const int blocks = plan.num_blocks();
  std::vector<FoldResult> results(blocks);
  std::vector<std::string> failures(blocks);
  parallel_for(blocks, [&](int block) {
    try {
      const std::vector<double> scores = fold_scores(dataset, integrator, base_model, plan, block);
      const std::vector<EntityPair> pairs = test_pairs(plan, block);
      std::vector<double> labels;
      labels.reserve(pairs.size());
      int positives = 0;
      for (const auto& p : pairs) {
        labels.push_back(dataset.interactions.matrix(p.drug, p.target));
        if (labels.back() > 0.5) ++positives;
      }
      FoldResult& r = results[block];
      r.fold = block;
      r.num_test_pairs = static_cast<int>(pairs.size());
      r.num_positives = positives;
      r.evaluated = positives > 0 && positives < r.num_test_pairs;
      if (r.evaluated) {
        r.aupr = aupr(scores, labels);
        r.auc = auc(scores, labels);
      } else {
        r.aupr = r.auc = std::numeric_limits<double>::quiet_NaN();
      }
    } catch (const std::exception& e) {
      failures[block] = e.what();
    }
  });
  for (int block = 0; block < blocks; ++block) {
    if (!failures[block].empty()) {
      throw Error(ErrorCode::kFoldFailed,
                  "fold " + std::to_string(block) + ": " + failures[block]);
    }
  }

  EvalReport report;
  report.integrator = std::string(to_string(integrator.method));
  report.integrator_params = integrator.to_params();
  auto probe = base_model.make_factory()();
  report.base_model = probe->name();
  report.base_model_params = probe->params();
  report.setting = plan.setting;
  report.folds = plan.folds;
  report.seed = plan.seed;
  report.fold_results = std::move(results);
  double sum_aupr = 0.0, sum_auc = 0.0;
  for (const auto& r : report.fold_results) {
    if (!r.evaluated) continue;
    sum_aupr += r.aupr;
    sum_auc += r.auc;
    ++report.evaluated_folds;
  }
  if (report.evaluated_folds > 0) {
    report.mean_aupr = sum_aupr / report.evaluated_folds;
    report.mean_auc = sum_auc / report.evaluated_folds;
  } else {
    report.mean_aupr = report.mean_auc = std::numeric_limits<double>::quiet_NaN();
  }
  return report;
}

}  // namespace simfuse
