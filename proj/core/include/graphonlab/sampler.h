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

// W-random graphs G(n, W) and the normalized count statistic.

#ifndef GRAPHONLAB_SAMPLER_H_
#define GRAPHONLAB_SAMPLER_H_

#include <cstdint>

#include "graphonlab/graph.h"
#include "graphonlab/graphon.h"
#include "graphonlab/limits.h"

namespace graphonlab {

struct SampleRecord {
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t raw_count = 0;
  double normalized = 0.0;
};

// Draws U_1..U_n uniform on [0,1), then for i < j (in lexicographic order)
// Y_ij uniform on (0,1], and keeps edge (i, j) iff Y_ij <= W(U_i, U_j).
// Identical (W, n, seed) give identical graphs.
LabeledGraph SampleGraph(const StepGraphon& w, std::int64_t n,
                         std::uint64_t seed);

// (CountCopies(H, G) - mean_count) / n^{scale exponent of law}.
SampleRecord NormalizedStatistic(const LabeledGraph& h, const StepGraphon& w,
                                 const LabeledGraph& g, const LimitLaw& law,
                                 std::uint64_t seed = 0);
// Variant with E X_n precomputed by the caller.
SampleRecord NormalizedStatistic(const LabeledGraph& h, const LabeledGraph& g,
                                 double mean_count, double scale_exponent,
                                 std::uint64_t seed = 0);

}  // namespace graphonlab

#endif  // GRAPHONLAB_SAMPLER_H_
