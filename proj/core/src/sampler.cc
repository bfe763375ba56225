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

#include "graphonlab/sampler.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "graphonlab/density.h"
#include "graphonlab/random.h"

namespace graphonlab {

LabeledGraph SampleGraph(const StepGraphon& w, std::int64_t n,
                         std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample graph needs n >= 1");
  CounterRng rng(seed);
  std::vector<int> block(n);
  for (auto& b : block) b = w.BlockOf(rng.Uniform());
  std::vector<Edge> edges;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      if (rng.UniformOpenClosed() <= w.value(block[i], block[j])) {
        edges.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
      }
    }
  }
  return LabeledGraph(static_cast<int>(n), std::move(edges));
}

SampleRecord NormalizedStatistic(const LabeledGraph& h, const LabeledGraph& g,
                                 double mean_count, double scale_exponent,
                                 std::uint64_t seed) {
  if (g.vertex_count() < h.vertex_count()) {
    throw std::invalid_argument("normalized statistic needs n >= |V(H)|");
  }
  SampleRecord record;
  record.n = g.vertex_count();
  record.seed = seed;
  record.raw_count = CountCopies(h, g);
  record.normalized = (static_cast<double>(record.raw_count) - mean_count) /
                      std::pow(static_cast<double>(record.n), scale_exponent);
  return record;
}

SampleRecord NormalizedStatistic(const LabeledGraph& h, const StepGraphon& w,
                                 const LabeledGraph& g, const LimitLaw& law,
                                 std::uint64_t seed) {
  if (g.vertex_count() < h.vertex_count()) {
    throw std::invalid_argument("normalized statistic needs n >= |V(H)|");
  }
  return NormalizedStatistic(h, g, MeanCount(h, w, g.vertex_count()),
                             ScaleExponent(law), seed);
}

}  // namespace graphonlab
