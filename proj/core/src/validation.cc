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
#include "simfuse/validation.h"

#include <cmath>
#include <string>

namespace simfuse {
namespace {

std::string cell(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void check_views(const std::vector<SimilarityView>& views, int expected_size,
                 std::string_view side, ValidationReport& report) {
  if (views.empty()) {
    report.violations.push_back({std::string(side) + " views", "no views"});
    return;
  }
  for (const auto& view : views) {
    const std::string where =
        std::string(side) + " view '" + view.label + "'";
    if (view.matrix.rows() != view.matrix.cols()) {
      report.violations.push_back({where, "not square"});
      continue;
    }
    if (view.size() != expected_size) {
      report.violations.push_back(
          {where, "size " + std::to_string(view.size()) +
                      " does not match " + std::to_string(expected_size) +
                      " entities"});
      continue;
    }
    for (int i = 0; i < view.size(); ++i) {
      for (int j = 0; j < view.size(); ++j) {
        const double v = view.matrix(i, j);
        if (!std::isfinite(v)) {
          report.violations.push_back({where + " " + cell(i, j), "non-finite value"});
        } else if (v < 0.0 || v > 1.0) {
          report.violations.push_back({where + " " + cell(i, j), "value outside [0,1]"});
        } else if (i == j && v != 1.0) {
          report.violations.push_back({where + " " + cell(i, j), "diagonal != 1"});
        }
      }
    }
  }
}

}  // namespace

ValidationReport validate_dataset(const Dataset& dataset) {
  ValidationReport report;
  const auto& y = dataset.interactions;
  if (static_cast<int>(y.drug_ids.size()) != y.num_drugs() ||
      static_cast<int>(y.target_ids.size()) != y.num_targets()) {
    report.violations.push_back({"interactions", "id list length mismatch"});
  }
  if (y.num_drugs() < 2 || y.num_targets() < 2) {
    report.violations.push_back({"interactions", "fewer than 2 drugs or targets"});
  }
  for (int i = 0; i < y.num_drugs(); ++i) {
    for (int j = 0; j < y.num_targets(); ++j) {
      const double v = y.matrix(i, j);
      if (v != 0.0 && v != 1.0) {
        report.violations.push_back({"interactions " + cell(i, j), "non-binary interaction"});
      }
    }
  }
  check_views(dataset.drug_views, y.num_drugs(), "drug", report);
  check_views(dataset.target_views, y.num_targets(), "target", report);
  return report;
}

std::vector<int> zero_rows(const Matrix& y) {
  std::vector<int> out;
  for (int i = 0; i < y.rows(); ++i) {
    if ((y.row(i).array() == 0.0).all()) out.push_back(i);
  }
  return out;
}

std::vector<int> nonzero_rows(const Matrix& y) {
  std::vector<int> out;
  for (int i = 0; i < y.rows(); ++i) {
    if (!(y.row(i).array() == 0.0).all()) out.push_back(i);
  }
  return out;
}

NewEntities new_entities(const InteractionMatrix& y) {
  NewEntities out;
  out.drugs = zero_rows(y.matrix);
  out.targets = zero_rows(y.matrix.transpose());
  return out;
}

double count_interactions(const InteractionMatrix& y) {
  return static_cast<double>((y.matrix.array() == 1.0).count());
}

double sparsity(const InteractionMatrix& y) {
  const double cells = static_cast<double>(y.num_drugs()) * y.num_targets();
  if (cells == 0.0) return 0.0;
  return count_interactions(y) / cells;
}

SanitizeCounts sanitize_view(SimilarityView& view) {
  SanitizeCounts counts;
  for (int i = 0; i < view.matrix.rows(); ++i) {
    for (int j = 0; j < view.matrix.cols(); ++j) {
      double& v = view.matrix(i, j);
      if (!std::isfinite(v)) {
        ++counts.non_finite;
        continue;
      }
      if (i == j) {
        if (v != 1.0) {
          v = 1.0;
          ++counts.diagonal_fixed;
        }
      } else if (v < 0.0) {
        v = 0.0;
        ++counts.clamped;
      } else if (v > 1.0) {
        v = 1.0;
        ++counts.clamped;
      }
    }
  }
  return counts;
}

}  // namespace simfuse
