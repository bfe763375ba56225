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

#include <cstdint>

#include "graphonlab/graphon.h"
#include "graphonlab/random.h"
#include "graphonlab/sampler.h"

namespace graphonlab {
namespace {

void BM_SampleGraph(benchmark::State& state) {
  const auto w = Discretize(ProductKernel{}, 64);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(SampleGraph(w, state.range(0), seed++));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * (state.range(0) - 1) / 2);
}
BENCHMARK(BM_SampleGraph)->Arg(50)->Arg(150)->Arg(500)->Unit(benchmark::kMicrosecond);

void BM_CounterRngUniform(benchmark::State& state) {
  CounterRng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(rng.Uniform());
}
BENCHMARK(BM_CounterRngUniform);

}  // namespace
}  // namespace graphonlab
