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

#include <benchmark/benchmark.h>

#include <vector>

#include "simfuse/fgs.h"
#include "simfuse/linear.h"
#include "simfuse/logging.h"
#include "simfuse/metrics.h"
#include "simfuse/rng.h"
#include "simfuse/snf.h"
#include "simfuse/synthetic.h"

namespace simfuse {
namespace {

Dataset make_data(int n, int views) {
  SyntheticSpec spec;
  spec.num_drugs = spec.num_targets = n;
  spec.drug_views = spec.target_views = views;
  spec.seed = 3;
  return generate_synthetic(spec).dataset;
}

void BM_FgsFuse(benchmark::State& state) {
  const Dataset ds = make_data(static_cast<int>(state.range(0)), 6);
  FgsParams p;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fgs_fuse(ds.drug_views, ds.interactions.matrix, p));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FgsFuse)->RangeMultiplier(2)->Range(100, 800)->Unit(benchmark::kMillisecond)->Complexity();

void BM_FgsWeights(benchmark::State& state) {
  const Dataset ds = make_data(static_cast<int>(state.range(0)), 6);
  FgsParams p;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fgs_weights(ds.drug_views, ds.interactions.matrix, p));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FgsWeights)->RangeMultiplier(2)->Range(100, 800)->Unit(benchmark::kMillisecond)->Complexity();

void BM_SnfFuse(benchmark::State& state) {
  const Dataset ds = make_data(static_cast<int>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(snf_fuse(ds.drug_views));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SnfFuse)->RangeMultiplier(2)->Range(100, 800)->Unit(benchmark::kMillisecond)->Complexity();

void BM_LicWeights(benchmark::State& state) {
  const Dataset ds = make_data(static_cast<int>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(lic_weights(ds.drug_views, ds.interactions.matrix, 5));
}
BENCHMARK(BM_LicWeights)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_Aupr(benchmark::State& state) {
  SplitMix64 rng(9);
  std::vector<double> scores(state.range(0)), labels(state.range(0));
  for (std::size_t i = 0; i < scores.size(); ++i) {
    scores[i] = rng.uniform();
    labels[i] = rng.uniform() < 0.05 ? 1.0 : 0.0;
  }
  for (auto _ : state) benchmark::DoNotOptimize(aupr(scores, labels));
}
BENCHMARK(BM_Aupr)->Arg(10000)->Arg(100000);

}  // namespace
}  // namespace simfuse

int main(int argc, char** argv) {
  simfuse::set_warnings_muted(true);
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
