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

#include "graphonlab/density.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.h"

namespace graphonlab {
namespace {

using ::graphonlab::testing::BruteForceConditional;
using ::graphonlab::testing::BruteForceHomDensity;
using ::graphonlab::testing::RandomGraph;
using ::graphonlab::testing::RandomStepGraphon;

StepGraphon Tilde(double p) { return Materialize(TwoBlockDiagonalKernel{p}, 2); }
StepGraphon Constant(double p) { return StepGraphon({1.0}, {{p}}); }

TEST(HomDensityTest, KnownValues) {
  EXPECT_NEAR(HomDensity(patterns::Complete(2), Constant(0.37)), 0.37, 1e-15);
  for (double p : {0.3, 0.5, 0.9}) {
    EXPECT_NEAR(HomDensity(patterns::Star(2), Tilde(p)), p * p / 4, 1e-15);
  }
  // Separable oracle for xy: t(K_{1,2}) = 1/3 * 1/2 * 1/2.
  const MultiGraph k12(patterns::Star(2));
  EXPECT_NEAR(testing::ProductKernelDensity(k12), 1.0 / 12, 1e-15);
  for (int m : {4, 64, 256}) {
    const double t = HomDensity(k12, Discretize(ProductKernel{}, m));
    EXPECT_NEAR(t, testing::DiscreteProductDensity(k12, m), 1e-14);
    EXPECT_NEAR(t, 1.0 / 12, 1.0 / (m * m));
  }
}

TEST(HomDensityTest, MatchesBruteForceOnRandomInputs) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const auto w = RandomStepGraphon(rng, 4);
    const auto f = RandomGraph(2 + trial % 5, 0.5, rng);
    EXPECT_NEAR(HomDensity(f, w), BruteForceHomDensity(f, w), 1e-13);
    std::vector<MultiGraph::WeightedEdge> multi;
    for (const auto& e : f.edges()) multi.push_back({e, 1 + (e.first + e.second) % 3});
    const MultiGraph mf(f.vertex_count(), multi);
    EXPECT_NEAR(HomDensity(mf, w), BruteForceHomDensity(mf, w), 1e-13);
  }
}

TEST(HomDensityTest, ProductKernelOracleOnManyPatterns) {
  // For xy every discretized density factorizes over vertices.
  const int m = 16;
  const auto w = Discretize(ProductKernel{}, m);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const MultiGraph f(RandomGraph(2 + trial % 7, 0.5, rng));
    EXPECT_NEAR(HomDensity(f, w), testing::DiscreteProductDensity(f, m), 1e-14);
  }
}

TEST(HomDensityTest, EdgelessAndZeroKernels) {
  std::mt19937_64 rng(1);
  const auto w = RandomStepGraphon(rng, 3);
  EXPECT_NEAR(HomDensity(patterns::Empty(4), w), 1.0, 1e-15);
  const StepGraphon zero({0.5, 0.5}, {{0, 0}, {0, 0}});
  EXPECT_EQ(HomDensity(patterns::Complete(3), zero), 0.0);
  // Bipartite W kills every odd cycle.
  const StepGraphon bipartite({0.5, 0.5}, {{0, 1}, {1, 0}});
  EXPECT_EQ(HomDensity(patterns::Complete(3), bipartite), 0.0);
  // A path must alternate sides: 2 of the 16 block maps survive.
  EXPECT_NEAR(HomDensity(patterns::Path(3), bipartite), 0.125, 1e-15);
}

TEST(HomDensityTest, KernelValuesAboveOne) {
  const StepGraphon k({0.5, 0.5}, {{2.0, 1.0}, {1.0, 3.0}});
  EXPECT_NEAR(HomDensity(patterns::Complete(2), k), 1.75, 1e-15);
  EXPECT_NEAR(HomDensity(patterns::Star(2), k), BruteForceHomDensity(patterns::Star(2), k), 1e-14);
}

TEST(HomDensityTest, RejectsLargePatterns) {
  EXPECT_THROW(HomDensity(patterns::Empty(9), Constant(0.5)), std::invalid_argument);
}

TEST(HomDensityTest, EightVertexPatternOnManyBlocks) {
  // Too large for enumeration, the contraction handles it; compare to the
  // product oracle.
  const int m = 64;
  const MultiGraph f(patterns::Path(7));
  EXPECT_NEAR(HomDensity(f, Discretize(ProductKernel{}, m)),
              testing::DiscreteProductDensity(f, m), 1e-15);
}

TEST(ConditionalDensityTest, KnownValues) {
  std::mt19937_64 rng(41);
  const auto k12 = patterns::Star(2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto w = RandomStepGraphon(rng, 4);
    const auto d = w.Degree();
    const int center[] = {1};
    const int leaf[] = {2};
    const auto t1 = ConditionalHomDensity(k12, center, w);
    const auto t2 = ConditionalHomDensity(k12, leaf, w);
    for (int x = 0; x < w.blocks(); ++x) {
      EXPECT_NEAR(t1.values[x], d[x] * d[x], 1e-14);
      double expected = 0.0;
      for (int y = 0; y < w.blocks(); ++y) {
        expected += w.block_weights()[y] * w.value(x, y) * d[y];
      }
      EXPECT_NEAR(t2.values[x], expected, 1e-14);
    }
  }
  const int marks[] = {2, 1, 3};
  const auto constant = ConditionalHomDensity(patterns::Complete(4), marks, Constant(0.6));
  for (double v : constant.values) EXPECT_NEAR(v, std::pow(0.6, 6), 1e-15);
}

TEST(ConditionalDensityTest, MatchesBruteForceAndMarginalizes) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const auto w = RandomStepGraphon(rng, 3);
    const auto h = RandomGraph(3 + trial % 3, 0.6, rng);
    // Marks in a scrambled order to exercise the ordering convention.
    std::vector<int> marks;
    for (int a = h.vertex_count(); a >= 1; a -= 2) marks.push_back(a);
    const auto t = ConditionalHomDensity(h, marks, w);
    ASSERT_EQ(t.values.size(), static_cast<std::size_t>(std::pow(w.blocks(), marks.size())));
    std::vector<int> blocks(marks.size(), 0);
    for (std::size_t idx = 0; idx < t.values.size(); ++idx) {
      std::size_t rest = idx;
      for (std::size_t s = marks.size(); s-- > 0;) {
        blocks[s] = static_cast<int>(rest % w.blocks());
        rest /= w.blocks();
      }
      EXPECT_NEAR(t.At(blocks), BruteForceConditional(h, marks, blocks, w), 1e-14);
      EXPECT_GE(t.values[idx], 0.0);
      EXPECT_LE(t.values[idx], 1.0);
    }
    EXPECT_NEAR(t.Average(w.block_weights()), HomDensity(h, w), 1e-12);
  }
}

TEST(ConditionalDensityTest, AllVerticesMarked) {
  const StepGraphon w({0.3, 0.7}, {{0.2, 0.5}, {0.5, 0.9}});
  const int marks[] = {1, 2};
  const auto t = ConditionalHomDensity(patterns::Complete(2), marks, w);
  EXPECT_EQ(t.values, (std::vector<double>{0.2, 0.5, 0.5, 0.9}));
}

TEST(ConditionalDensityTest, Errors) {
  const auto h = patterns::Star(2);
  const auto w = Constant(0.5);
  EXPECT_THROW(ConditionalHomDensity(h, std::vector<int>{}, w), std::invalid_argument);
  EXPECT_THROW(ConditionalHomDensity(h, std::vector<int>{1, 1}, w), std::invalid_argument);
  EXPECT_THROW(ConditionalHomDensity(h, std::vector<int>{4}, w), std::invalid_argument);
  EXPECT_THROW(ConditionalHomDensity(h, std::vector<int>{0}, w), std::invalid_argument);
}

TEST(MeanCountTest, KnownValues) {
  const double p = 0.35;
  EXPECT_NEAR(MeanCount(patterns::Complete(2), Constant(p), 3), 3 * p, 1e-14);
  EXPECT_NEAR(MeanCount(patterns::Complete(3), Constant(p), 4), 4 * p * p * p, 1e-14);
  std::mt19937_64 rng(2);
  const auto w = RandomStepGraphon(rng, 4);
  for (int n : {3, 10, 150}) {
    const double binom = n * (n - 1.0) * (n - 2.0) / 6.0;
    EXPECT_NEAR(MeanCount(patterns::Star(2), w, n),
                3 * binom * HomDensity(patterns::Star(2), w), 1e-9);
  }
  EXPECT_THROW(MeanCount(patterns::Complete(3), Constant(p), 2), std::invalid_argument);
  EXPECT_EQ(FallingFactorial(5, 3), 60.0);
  EXPECT_EQ(FallingFactorial(5, 0), 1.0);
}

TEST(RegularityTest, KnownValues) {
  for (double p : {0.2, 0.5, 0.9}) {
    for (const auto& h : {patterns::Complete(2), patterns::Star(2), patterns::Complete(3)}) {
      const auto report = RegularityDefect(h, Constant(p));
      EXPECT_LE(report.defect, 1e-15);
      EXPECT_TRUE(report.IsRegular());
      EXPECT_FALSE(report.degenerate());
    }
    EXPECT_LE(RegularityDefect(patterns::Star(2), Tilde(p)).defect, 1e-15);
  }
  const auto product = RegularityDefect(patterns::Star(2), Discretize(ProductKernel{}, 64));
  EXPECT_GT(product.defect, 1e-2);
  EXPECT_FALSE(product.IsRegular());
}

TEST(RegularityTest, DegreeIrregularGraphonIsNotStarRegular) {
  // Edges are always regular for degree-regular W and vice versa.
  const StepGraphon w({0.5, 0.5}, {{0.8, 0.2}, {0.2, 0.1}});
  EXPECT_FALSE(RegularityDefect(patterns::Complete(2), w).IsRegular());
  EXPECT_FALSE(RegularityDefect(patterns::Star(2), w).IsRegular());
  const StepGraphon balanced({0.5, 0.5}, {{0.1, 0.7}, {0.7, 0.1}});
  EXPECT_TRUE(RegularityDefect(patterns::Complete(2), balanced).IsRegular());
  EXPECT_TRUE(RegularityDefect(patterns::Star(2), balanced).IsRegular());
}

TEST(RegularityTest, DegenerateInputsAreFlagged) {
  const auto complete = RegularityDefect(patterns::Complete(3), Constant(1.0));
  EXPECT_EQ(complete.degeneracy, Degeneracy::kComplete);
  EXPECT_TRUE(complete.degenerate());
  const StepGraphon bipartite({0.5, 0.5}, {{0, 1}, {1, 0}});
  const auto free = RegularityDefect(patterns::Complete(3), bipartite);
  EXPECT_EQ(free.degeneracy, Degeneracy::kPatternFree);
  EXPECT_STREQ(DegeneracyName(free.degeneracy), "pattern_free");
  EXPECT_THROW(RegularityDefect(patterns::Star(2), StepGraphon({1.0}, {{1.5}})),
               std::invalid_argument);
}

TEST(TwoPointGraphonTest, KnownValues) {
  for (double p : {0.3, 0.5, 0.9}) {
    const auto wh = TwoPointGraphon(patterns::Star(2), Tilde(p));
    EXPECT_NEAR(wh.value(0, 0), 3 * p * p / 4, 1e-15);
    EXPECT_NEAR(wh.value(1, 1), 3 * p * p / 4, 1e-15);
    EXPECT_EQ(wh.value(0, 1), 0.0);
  }
  const auto k2 = TwoPointGraphon(patterns::Complete(2), Constant(0.4));
  EXPECT_NEAR(k2.value(0, 0), 0.2, 1e-16);
  EXPECT_THROW(TwoPointGraphon(patterns::Complete(1), Constant(0.4)), std::invalid_argument);
}

TEST(TwoPointGraphonTest, StarClosedForm) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const auto w = RandomStepGraphon(rng, 4);
    const auto wh = TwoPointGraphon(patterns::Star(2), w);
    const auto d = w.Degree();
    const auto& pi = w.block_weights();
    for (int x = 0; x < w.blocks(); ++x) {
      for (int y = 0; y < w.blocks(); ++y) {
        double common = 0.0;
        for (int z = 0; z < w.blocks(); ++z) common += pi[z] * w.value(x, z) * w.value(y, z);
        EXPECT_NEAR(wh.value(x, y), 0.5 * (w.value(x, y) * (d[x] + d[y]) + common), 1e-14);
      }
    }
  }
}

TEST(TwoPointGraphonTest, DegreeAndRange) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const auto w = RandomStepGraphon(rng, 4);
    const auto h = RandomGraph(2 + trial % 4, 0.7, rng);
    const int v = h.vertex_count();
    const double aut = static_cast<double>(AutomorphismCount(h));
    const auto wh = TwoPointGraphon(h, w);
    for (int i = 0; i < wh.blocks(); ++i) {
      for (int j = 0; j < wh.blocks(); ++j) {
        EXPECT_EQ(wh.value(i, j), wh.value(j, i));
        EXPECT_GE(wh.value(i, j), 0.0);
        EXPECT_LE(wh.value(i, j), v * (v - 1) / (2 * aut) + 1e-12);
      }
    }
    const auto one_point = OnePointDensities(h, w);
    const auto degree = wh.Degree();
    for (int x = 0; x < w.blocks(); ++x) {
      double sum = 0.0;
      for (int a = 0; a < v; ++a) sum += one_point[a][x];
      EXPECT_NEAR(degree[x], (v - 1) / (2 * aut) * sum, 1e-13);
    }
  }
}

}  // namespace
}  // namespace graphonlab
