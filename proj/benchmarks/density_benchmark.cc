// Copyright 2026 The Graphonlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "graphonlab/density.h"
#include "graphonlab/graph.h"
#include "graphonlab/graphon.h"
#include "graphonlab/limits.h"

namespace graphonlab {
namespace {

void BM_HomDensityPath(benchmark::State& state) {
  const auto w = Discretize(ProductKernel{}, static_cast<int>(state.range(1)));
  const auto f = patterns::Path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(HomDensity(f, w));
}
BENCHMARK(BM_HomDensityPath)->ArgsProduct({{2, 4, 7}, {16, 256}})->Unit(benchmark::kMicrosecond);

void BM_HomDensityClique(benchmark::State& state) {
  const auto w = Discretize(ProductKernel{}, static_cast<int>(state.range(1)));
  const auto f = patterns::Complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(HomDensity(f, w));
}
BENCHMARK(BM_HomDensityClique)->ArgsProduct({{3, 4}, {16, 64}})->Unit(benchmark::kMicrosecond);

void BM_TauSquaredProduct(benchmark::State& state) {
  const auto w = Discretize(ProductKernel{}, static_cast<int>(state.range(0)));
  const auto h = patterns::Star(2);
  for (auto _ : state) benchmark::DoNotOptimize(TauSquared(h, w));
}
BENCHMARK(BM_TauSquaredProduct)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace graphonlab
