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
#include "simfuse/types.h"

#include <algorithm>
#include <array>
#include <cctype>

namespace simfuse {
namespace {

constexpr std::array<std::pair<Method, std::string_view>, 8> kMethodNames{{
    {Method::kAve, "ave"},
    {Method::kKa, "ka"},
    {Method::kHsic, "hsic"},
    {Method::kLic, "lic"},
    {Method::kSnf, "snf"},
    {Method::kSnfH, "snf-h"},
    {Method::kSnfF, "snf-f"},
    {Method::kFgs, "fgs"},
}};

}  // namespace

std::string_view to_string(EntityKind kind) {
  return kind == EntityKind::kDrug ? "drug" : "target";
}

InteractionMatrix InteractionMatrix::from_matrix(Matrix y) {
  InteractionMatrix out;
  for (int i = 0; i < y.rows(); ++i) out.drug_ids.push_back("d" + std::to_string(i));
  for (int j = 0; j < y.cols(); ++j) out.target_ids.push_back("t" + std::to_string(j));
  out.matrix = std::move(y);
  return out;
}

std::string_view to_string(Method method) {
  for (const auto& [m, name] : kMethodNames) {
    if (m == method) return name;
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  std::string lowered(name);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) {
                   return c == '_' ? '-' : static_cast<char>(std::tolower(c));
                 });
  for (const auto& [m, canonical] : kMethodNames) {
    if (lowered == canonical) return m;
  }
  return std::nullopt;
}

std::string valid_method_names() {
  std::string out;
  for (const auto& [m, name] : kMethodNames) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

}  // namespace simfuse
