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
#ifndef SIMFUSE_REPORT_H_
#define SIMFUSE_REPORT_H_

#include <span>
#include <string>

#include "simfuse/experiment.h"

namespace simfuse {

// Both formats are byte-stable: no timestamps, shortest round-trip numbers.
std::string reports_to_json(std::span<const EvalReport> reports);
// Columns: setting, integrator, fold, aupr, auc. Unevaluated folds print NaN.
std::string reports_to_tsv(std::span<const EvalReport> reports);

}  // namespace simfuse

#endif  // SIMFUSE_REPORT_H_
