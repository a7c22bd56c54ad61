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
#include "simfuse/integrate.h"

#include <string>

#include "simfuse/errors.h"

namespace simfuse {

ParamMap IntegratorConfig::to_params() const {
  switch (method) {
    case Method::kAve:
    case Method::kKa:
      return {};
    case Method::kHsic:
      return {{"lambda1", hsic.lambda1},
              {"lambda2", hsic.lambda2},
              {"max_iters", static_cast<double>(hsic.max_iters)},
              {"tol", hsic.tol}};
    case Method::kLic:
      return {{"k", static_cast<double>(lic_k)}, {"reading", static_cast<double>(reading)}};
    case Method::kSnf:
    case Method::kSnfH:
      return snf.to_params();
    case Method::kSnfF: {
      ParamMap p = snf.to_params();
      p["inner_folds"] = snff_inner_folds;
      p["inner_seed"] = static_cast<double>(snff_seed);
      return p;
    }
    case Method::kFgs:
      return fgs.to_params();
  }
  return {};
}

SideIntegration integrate_side(std::span<const SimilarityView> views,
                               std::span<const SimilarityView> other_views,
                               const Matrix& y, const IntegratorConfig& config,
                               const BaseModelFactory& model_factory) {
  if (views.empty()) throw Error(ErrorCode::kInvalidArgument, "no views given");
  SideIntegration out;
  const int m = static_cast<int>(views.size());

  if (m == 1) {
    // Every integrator reduces to the identity on a single view.
    out.fused.matrix = views.front().matrix;
    out.fused.method = config.method;
    out.fused.params = config.to_params();
    if (config.method == Method::kFgs) {
      out.weights = WeightMatrix{Matrix::Ones(views.front().size(), 1), views.front().kind};
    } else if (config.method == Method::kSnfH || config.method == Method::kSnfF) {
      out.selected_views = {0};
    } else if (config.method != Method::kSnf) {
      out.global_weights = GlobalWeights{Vector::Ones(1), config.method};
    }
    return out;
  }

  auto linear = [&](GlobalWeights w) {
    out.fused = fuse_linear(views, w);
    out.fused.params = config.to_params();
    out.global_weights = std::move(w);
  };

  switch (config.method) {
    case Method::kAve:
      linear(ave_weights(m));
      break;
    case Method::kKa:
      linear(ka_weights(views, y));
      break;
    case Method::kHsic:
      linear(hsic_weights(views, y, config.hsic));
      break;
    case Method::kLic:
      linear(lic_weights(views, y, config.lic_k, config.reading));
      break;
    case Method::kSnf:
      out.fused = snf_fuse(views, config.snf);
      break;
    case Method::kSnfH:
      out.selected_views = snfh_select(views, config.snf);
      out.fused = snfh_fuse(views, config.snf);
      break;
    case Method::kSnfF: {
      if (other_views.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "SNF-F needs the other side's views");
      }
      ForwardSelectionOptions options;
      options.other_side = fuse_linear(other_views, ave_weights(static_cast<int>(other_views.size()))).matrix;
      options.model_factory = model_factory ? model_factory : neighborhood_factory();
      options.seed = config.snff_seed;
      options.inner_folds = config.snff_inner_folds;
      out.selected_views = snff_select(views, y, config.snf, options);
      std::vector<SimilarityView> chosen;
      for (int h : out.selected_views) chosen.push_back(views[h]);
      if (chosen.size() == 1) {
        out.fused.matrix = chosen.front().matrix;
      } else {
        out.fused = snf_fuse(chosen, config.snf);
      }
      out.fused.method = Method::kSnfF;
      out.fused.params = config.to_params();
      out.fused.params["selected_views"] = static_cast<double>(chosen.size());
      break;
    }
    case Method::kFgs: {
      FgsParams params = config.fgs;
      FgsResult result = fgs_fuse(views, y, params);
      out.fused = std::move(result.fused);
      out.weights = std::move(result.weights);
      break;
    }
  }
  return out;
}

}  // namespace simfuse
