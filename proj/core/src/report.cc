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
#include "simfuse/report.h"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "simfuse/io.h"

namespace simfuse {
namespace {

nlohmann::ordered_json params_json(const ParamMap& params) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [key, value] : params) out[key] = value;
  return out;
}

nlohmann::ordered_json metric(double value) {
  if (std::isnan(value)) return nullptr;
  return value;
}

}  // namespace

std::string reports_to_json(std::span<const EvalReport> reports) {
  nlohmann::ordered_json root = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["integrator"] = r.integrator;
    j["integrator_params"] = params_json(r.integrator_params);
    j["base_model"] = r.base_model;
    j["base_model_params"] = params_json(r.base_model_params);
    j["setting"] = std::string(to_string(r.setting));
    j["folds"] = r.folds;
    j["seed"] = r.seed;
    nlohmann::ordered_json folds = nlohmann::ordered_json::array();
    for (const auto& f : r.fold_results) {
      nlohmann::ordered_json fj;
      fj["fold"] = f.fold;
      fj["test_pairs"] = f.num_test_pairs;
      fj["positives"] = f.num_positives;
      fj["evaluated"] = f.evaluated;
      fj["aupr"] = metric(f.aupr);
      fj["auc"] = metric(f.auc);
      folds.push_back(std::move(fj));
    }
    j["fold_results"] = std::move(folds);
    j["evaluated_folds"] = r.evaluated_folds;
    j["mean_aupr"] = metric(r.mean_aupr);
    j["mean_auc"] = metric(r.mean_auc);
    root.push_back(std::move(j));
  }
  return root.dump(2) + "\n";
}

std::string reports_to_tsv(std::span<const EvalReport> reports) {
  std::ostringstream out;
  out << "setting\tintegrator\tfold\taupr\tauc\n";
  for (const auto& r : reports) {
    const std::string setting(to_string(r.setting));
    for (const auto& f : r.fold_results) {
      out << setting << '\t' << r.integrator << '\t' << f.fold << '\t'
          << format_double(f.aupr) << '\t' << format_double(f.auc) << '\n';
    }
    out << setting << '\t' << r.integrator << "\tmean\t" << format_double(r.mean_aupr)
        << '\t' << format_double(r.mean_auc) << '\n';
  }
  return out.str();
}

}  // namespace simfuse
