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
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "graphonlab/density.h"
#include "graphonlab/random.h"
#include "graphonlab/simulate.h"

namespace graphonlab {
namespace {

StepGraphon Constant(double p) { return StepGraphon({1.0}, {{p}}); }

TEST(SampleGraphTest, KnownValues) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(SampleGraph(Constant(1.0), 5, seed), patterns::Complete(5));
    EXPECT_EQ(SampleGraph(Constant(0.0), 5, seed), patterns::Empty(5));
  }
  const double p = 0.3;
  const int n = 12;
  const int draws = 10000;
  const double pairs = n * (n - 1) / 2.0;
  std::vector<double> edges;
  for (int i = 0; i < draws; ++i) {
    edges.push_back(SampleGraph(Constant(p), n, SplitKey(99, i)).edge_count());
  }
  const auto s = Summarize(edges);
  EXPECT_NEAR(s.mean, p * pairs, 4 * std::sqrt(pairs * p * (1 - p) / draws));
  EXPECT_NEAR(s.variance, pairs * p * (1 - p), 0.1 * pairs * p * (1 - p));
}

TEST(SampleGraphTest, Reproducible) {
  const auto w = Discretize(ProductKernel{}, 16);
  const auto a = SampleGraph(w, 80, 1234);
  EXPECT_EQ(a, SampleGraph(w, 80, 1234));
  EXPECT_NE(a, SampleGraph(w, 80, 1235));
  EXPECT_THROW(SampleGraph(w, 0, 1), std::invalid_argument);
  EXPECT_EQ(SampleGraph(w, 1, 1).edge_count(), 0);
}

TEST(SampleGraphTest, BlockStructureIsRespected) {
  // Disjoint union of two complete blocks: every component is a clique.
  const auto g = SampleGraph(Materialize(TwoBlockDiagonalKernel{1.0}, 2), 40, 5);
  for (int a = 1; a <= 40; ++a) {
    for (int b = a + 1; b <= 40; ++b) {
      for (int c = b + 1; c <= 40; ++c) {
        const int present = g.HasEdge(a, b) + g.HasEdge(a, c) + g.HasEdge(b, c);
        EXPECT_NE(present, 2);
      }
    }
  }
}

TEST(SampleGraphTest, EdgeDensityConvergesToIntegral) {
  const auto w = Discretize(ProductKernel{}, 64);
  const double target = HomDensity(patterns::Complete(2), w);
  const int n = 500, replicates = 100;
  std::vector<double> density;
  for (int r = 0; r < replicates; ++r) {
    const auto g = SampleGraph(w, n, SplitKey(3, r));
    density.push_back(g.edge_count() / (n * (n - 1) / 2.0));
  }
  const auto s = Summarize(density);
  EXPECT_NEAR(s.mean, target, 4 * std::sqrt(s.variance / replicates));
}

TEST(SampleGraphTest, RawCountMeanMatchesMeanCount) {
  const auto w = StepGraphon({0.3, 0.7}, {{0.9, 0.2}, {0.2, 0.5}});
  const auto h = patterns::Star(2);
  const int n = 30, replicates = 2000;
  std::vector<double> counts;
  for (int r = 0; r < replicates; ++r) {
    counts.push_back(static_cast<double>(CountCopies(h, SampleGraph(w, n, SplitKey(4, r)))));
  }
  const auto s = Summarize(counts);
  EXPECT_NEAR(s.mean, MeanCount(h, w, n), 4 * std::sqrt(s.variance / replicates));
}

TEST(NormalizedStatisticTest, CompleteGraphonIsExact) {
  const auto h = patterns::Complete(3);
  for (int n : {3, 10, 40}) {
    const auto g = SampleGraph(Constant(1.0), n, 8);
    const auto r = NormalizedStatistic(h, Constant(1.0), g, GaussianLaw{0.0, 2.5}, 8);
    EXPECT_EQ(r.raw_count, static_cast<std::uint64_t>(n) * (n - 1) * (n - 2) / 6);
    EXPECT_EQ(r.normalized, 0.0);
    EXPECT_EQ(r.n, n);
    EXPECT_EQ(r.seed, 8u);
  }
}

TEST(NormalizedStatisticTest, SingleEdgeHasTwoPointSupportWithMeanZero) {
  const double p = 0.3;
  const auto h = patterns::Complete(2);
  const LimitLaw law = GaussianLaw{0.0, 1.5};
  const auto absent = NormalizedStatistic(h, Constant(p), patterns::Empty(2), law);
  const auto present = NormalizedStatistic(h, Constant(p), patterns::Complete(2), law);
  const double scale = std::pow(2.0, 1.5);
  EXPECT_NEAR(absent.normalized, -p / scale, 1e-15);
  EXPECT_NEAR(present.normalized, (1 - p) / scale, 1e-15);
  EXPECT_NEAR((1 - p) * absent.normalized + p * present.normalized, 0.0, 1e-15);
}

TEST(NormalizedStatisticTest, TwoBlockReplicateMeanIsCentered) {
  const auto w = Materialize(TwoBlockDiagonalKernel{0.5}, 2);
  const auto h = patterns::Star(2);
  const LimitLaw law = MixtureLaw{1.0 / 64, {3.0 / 32}, 2.0};
  const int n = 150, replicates = 300;
  std::vector<double> values;
  for (int r = 0; r < replicates; ++r) {
    const auto seed = SplitKey(11, r);
    values.push_back(NormalizedStatistic(h, w, SampleGraph(w, n, seed), law, seed).normalized);
  }
  const auto s = Summarize(values);
  EXPECT_LT(std::abs(s.mean), 3 * std::sqrt(s.variance / replicates));
}

TEST(NormalizedStatisticTest, RejectsSmallHosts) {
  EXPECT_THROW(NormalizedStatistic(patterns::Complete(3), Constant(0.5), patterns::Complete(2),
                                   GaussianLaw{1.0, 2.5}),
               std::invalid_argument);
}

}  // namespace
}  // namespace graphonlab
