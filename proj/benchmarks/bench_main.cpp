// Copyright 2026 The groundml Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <benchmark/benchmark.h>

#include "groundml/dataset.hpp"
#include "groundml/ot.hpp"
#include "groundml/trainer.hpp"
#include "groundml/triplets.hpp"

namespace groundml {
namespace {

EmpiricalDistribution cloud(std::mt19937_64& rng, Index n, Index dim, double shift) {
  std::normal_distribution<double> normal(shift, 1.0);
  RowMatrix pts(n, dim);
  for (Index i = 0; i < pts.size(); ++i) pts.data()[i] = normal(rng);
  return make_distribution("c", std::move(pts), 0);
}

void BM_Emd(benchmark::State& state) {
  const Index n = state.range(0);
  std::mt19937_64 rng(1);
  const auto x = cloud(rng, n, 2, 0.0);
  const auto y = cloud(rng, n, 2, 1.0);
  const Matrix c = cost_matrix(BaselineMetric::euclidean, x, y);
  for (auto _ : state) benchmark::DoNotOptimize(emd(c, x.weights, y.weights).total_cost);
  state.SetComplexityN(n);
}
BENCHMARK(BM_Emd)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_WassersteinGradient(benchmark::State& state) {
  const Index dim = state.range(0);
  std::mt19937_64 rng(2);
  const auto x = cloud(rng, 50, dim, 0.0);
  const auto y = cloud(rng, 50, dim, 0.5);
  const auto w = LowRankMahalanobis::identity_truncated(5, dim);
  const auto px = project(w, x);
  const auto py = project(w, y);
  for (auto _ : state) benchmark::DoNotOptimize(wasserstein_gradient(px, py).value);
}
BENCHMARK(BM_WassersteinGradient)->Arg(10)->Arg(200);

void BM_TrainEpoch(benchmark::State& state) {
  auto cfg = SynthConfig::anisotropic_2d(3);
  const auto ds = generate_synthetic(cfg);
  TrainConfig tc;
  tc.rank_k = 2;
  tc.epochs = 1;
  tc.threads = static_cast<unsigned>(state.range(0));
  const auto triplets = build_triplets(ds, tc.neighbor_t, tc.neighbor_source, 0);
  for (auto _ : state) benchmark::DoNotOptimize(train(ds, triplets, tc).loss_trace.back());
  state.counters["triplets"] = static_cast<double>(triplets.size());
}
BENCHMARK(BM_TrainEpoch)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace groundml

BENCHMARK_MAIN();
