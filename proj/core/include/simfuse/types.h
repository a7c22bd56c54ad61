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
#ifndef SIMFUSE_TYPES_H_
#define SIMFUSE_TYPES_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace simfuse {

// Row-major so that a similarity row is a contiguous span.
using Matrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

inline std::span<const double> row_span(const Matrix& m, int row) {
  return {m.data() + static_cast<std::ptrdiff_t>(row) * m.cols(),
          static_cast<std::size_t>(m.cols())};
}

enum class EntityKind { kDrug, kTarget };

std::string_view to_string(EntityKind kind);

/// One n x n similarity matrix over drugs or targets from a single source.
/// Entries are expected in [0,1] with a unit diagonal; symmetry is not
/// required. validate_dataset() reports breaches, the loader repairs them.
struct SimilarityView {
  Matrix matrix;
  EntityKind kind = EntityKind::kDrug;
  std::string label;

  int size() const { return static_cast<int>(matrix.rows()); }
};

/// Binary drug x target matrix of known interactions.
struct InteractionMatrix {
  Matrix matrix;
  std::vector<std::string> drug_ids;
  std::vector<std::string> target_ids;

  int num_drugs() const { return static_cast<int>(matrix.rows()); }
  int num_targets() const { return static_cast<int>(matrix.cols()); }

  // Generates ids d0, d1, ... and t0, t1, ...
  static InteractionMatrix from_matrix(Matrix y);
};

struct Dataset {
  std::vector<SimilarityView> drug_views;
  std::vector<SimilarityView> target_views;
  InteractionMatrix interactions;

  int num_drugs() const { return interactions.num_drugs(); }
  int num_targets() const { return interactions.num_targets(); }
};

/// Per-entity, per-view fusion weights (n x m).
struct WeightMatrix {
  Matrix matrix;
  EntityKind kind = EntityKind::kDrug;
};

enum class Method { kAve, kKa, kHsic, kLic, kSnf, kSnfH, kSnfF, kFgs };

std::string_view to_string(Method method);
// Case-insensitive; accepts "snf-h" and "snf_h" spellings.
std::optional<Method> parse_method(std::string_view name);
// Comma-separated canonical names, for diagnostics.
std::string valid_method_names();

using ParamMap = std::map<std::string, double>;

struct FusedSimilarity {
  Matrix matrix;
  Method method = Method::kAve;
  ParamMap params;
};

/// A length-m weight vector on the probability simplex.
struct GlobalWeights {
  Vector weights;
  Method method = Method::kAve;
};

struct EntityPair {
  int drug = 0;
  int target = 0;

  friend bool operator==(const EntityPair&, const EntityPair&) = default;
};

}  // namespace simfuse

#endif  // SIMFUSE_TYPES_H_
