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
#ifndef SIMFUSE_VALIDATION_H_
#define SIMFUSE_VALIDATION_H_

#include <string>
#include <vector>

#include "simfuse/types.h"

namespace simfuse {

struct Violation {
  std::string location;  // e.g. "drug view 'SIMCOMP' (2,2)"
  std::string message;   // e.g. "diagonal != 1"
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

// Never mutates; an empty report means every integrator accepts the dataset.
ValidationReport validate_dataset(const Dataset& dataset);

struct NewEntities {
  std::vector<int> drugs;
  std::vector<int> targets;
};

// All-zero rows (new drugs) and all-zero columns (new targets).
NewEntities new_entities(const InteractionMatrix& y);

std::vector<int> zero_rows(const Matrix& y);
std::vector<int> nonzero_rows(const Matrix& y);

// (#ones) / (n_d * n_t).
double sparsity(const InteractionMatrix& y);
double count_interactions(const InteractionMatrix& y);

struct SanitizeCounts {
  int diagonal_fixed = 0;
  int clamped = 0;
  int non_finite = 0;
};

// Sets the diagonal to 1 and clamps entries into [0,1]. Non-finite entries
// are counted but left alone; the loader rejects them before this point.
SanitizeCounts sanitize_view(SimilarityView& view);

}  // namespace simfuse

#endif  // SIMFUSE_VALIDATION_H_
