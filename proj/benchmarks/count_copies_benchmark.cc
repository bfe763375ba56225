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

#include "graphonlab/graph.h"
#include "graphonlab/graphon.h"
#include "graphonlab/sampler.h"

namespace graphonlab {
namespace {

LabeledGraph Pattern(int id) {
  switch (id) {
    case 0:
      return patterns::Star(2);
    case 1:
      return patterns::Complete(3);
    case 2:
      return patterns::Path(4);
    default:
      return patterns::Complete(4);
  }
}

void BM_CountCopies(benchmark::State& state) {
  const auto h = Pattern(static_cast<int>(state.range(0)));
  const auto g = SampleGraph(StepGraphon({1.0}, {{0.5}}), state.range(1), 1);
  for (auto _ : state) benchmark::DoNotOptimize(CountCopies(h, g));
  state.SetLabel(std::to_string(h.vertex_count()) + " vertices, " +
                 std::to_string(h.edge_count()) + " edges");
}
BENCHMARK(BM_CountCopies)
    ->ArgsProduct({{0, 1, 3}, {50, 150, 300}})
    ->Unit(benchmark::kMicrosecond);
// The path has on the order of n^5 / 32 copies at density 1/2, each visited.
BENCHMARK(BM_CountCopies)->Args({2, 50})->Args({2, 100})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace graphonlab
