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

#include "graphonlab/graphon.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.h"

namespace graphonlab {
namespace {

TEST(StepGraphonTest, Validation) {
  EXPECT_NO_THROW(StepGraphon({0.5, 0.5}, {{0.1, 0.2}, {0.2, 0.3}}));
  EXPECT_THROW(StepGraphon({}, {}), std::invalid_argument);
  EXPECT_THROW(StepGraphon({0.5, 0.6}, {{0, 0}, {0, 0}}), std::invalid_argument);
  EXPECT_THROW(StepGraphon({1.0, 0.0}, {{0, 0}, {0, 0}}), std::invalid_argument);
  EXPECT_THROW(StepGraphon({0.5, 0.5}, {{0, 0.1}, {0.2, 0}}), std::invalid_argument);
  EXPECT_THROW(StepGraphon({0.5, 0.5}, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(StepGraphon({0.5, 0.5}, {{0, 0}, {0}}), std::invalid_argument);
  EXPECT_THROW(StepGraphon({1.0}, {{NAN}}), std::invalid_argument);
}

TEST(StepGraphonTest, KernelsMayLeaveUnitInterval) {
  const StepGraphon k({1.0}, {{2.5}});
  EXPECT_FALSE(k.IsGraphon());
  EXPECT_FALSE(k.IsComplete());
  EXPECT_TRUE(StepGraphon({1.0}, {{1.0}}).IsComplete());
  EXPECT_TRUE(StepGraphon({1.0}, {{1.0}}).IsGraphon());
}

TEST(EvaluateTest, KnownValues) {
  const auto constant = Discretize(ConstantKernel{0.4}, 3);
  EXPECT_EQ(constant.Evaluate(0.1, 0.9), 0.4);
  EXPECT_EQ(constant.Evaluate(1.0, 0.0), 0.4);
  const auto tilde = Materialize(TwoBlockDiagonalKernel{0.7}, 2);
  EXPECT_EQ(tilde.Evaluate(0.25, 0.75), 0.0);
  EXPECT_EQ(tilde.Evaluate(0.25, 0.25), 0.7);
  EXPECT_EQ(tilde.Evaluate(0.75, 0.75), 0.7);
}

TEST(EvaluateTest, BlockBoundaries) {
  const StepGraphon w({0.25, 0.75}, {{0.1, 0.2}, {0.2, 0.3}});
  EXPECT_EQ(w.BlockOf(0.0), 0);
  EXPECT_EQ(w.BlockOf(0.2499), 0);
  EXPECT_EQ(w.BlockOf(0.25), 1);
  EXPECT_EQ(w.BlockOf(1.0), 1);
  EXPECT_EQ(w.Breakpoints(), (std::vector<double>{0.0, 0.25, 1.0}));
  EXPECT_THROW(w.Evaluate(-0.1, 0.5), std::out_of_range);
  EXPECT_THROW(w.Evaluate(0.5, 1.01), std::out_of_range);
}

TEST(EvaluateTest, Symmetric) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto w = testing::RandomStepGraphon(rng, 5);
    for (int i = 0; i < 50; ++i) {
      const double x = unit(rng), y = unit(rng);
      EXPECT_EQ(w.Evaluate(x, y), w.Evaluate(y, x));
    }
  }
}

TEST(DegreeTest, KnownValues) {
  for (int m : {1, 3, 7, 64}) {
    for (double d : Discretize(ConstantKernel{0.3}, m).Degree()) EXPECT_EQ(d, 0.3);
  }
  for (double d : Discretize(TwoBlockDiagonalKernel{0.6}, 4).Degree()) {
    EXPECT_NEAR(d, 0.3, 1e-15);
  }
  const int m = 64;
  const auto product = Discretize(ProductKernel{}, m);
  const auto degree = product.Degree();
  for (int c = 0; c < m; ++c) {
    EXPECT_NEAR(degree[c], (2.0 * c + 1) / (2.0 * m) / 2.0, 1e-14);
  }
}

TEST(DiscretizeTest, KnownValues) {
  const auto product = Discretize(ProductKernel{}, 2);
  EXPECT_NEAR(product.value(0, 0), 1.0 / 16, 1e-15);
  EXPECT_NEAR(product.value(0, 1), 3.0 / 16, 1e-15);
  EXPECT_NEAR(product.value(1, 1), 9.0 / 16, 1e-15);
  EXPECT_EQ(product.block_weights(), (std::vector<double>{0.5, 0.5}));

  const auto tilde = Discretize(TwoBlockDiagonalKernel{0.8}, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      EXPECT_EQ(tilde.value(i, j), (i < 2) == (j < 2) ? 0.8 : 0.0);
    }
  }
  EXPECT_THROW(Discretize(ConstantKernel{0.5}, 0), std::invalid_argument);
}

TEST(DiscretizeTest, OddCellsAverageAcrossTheMidpoint) {
  // With m = 3 the middle cell straddles 1/2: its diagonal average is
  // p * (1/2)^2 + p * (1/2)^2 = p / 2.
  const auto tilde = Discretize(TwoBlockDiagonalKernel{0.8}, 3);
  EXPECT_NEAR(tilde.value(1, 1), 0.4, 1e-15);
  EXPECT_NEAR(tilde.value(0, 1), 0.4, 1e-15);
  EXPECT_NEAR(tilde.value(0, 2), 0.0, 1e-15);
}

TEST(DiscretizeTest, PreservesTheIntegralOfProduct) {
  for (int m : {1, 2, 5, 16}) {
    const auto w = Discretize(ProductKernel{}, m);
    double integral = 0.0;
    for (double x : w.flat_values()) integral += x / (m * m);
    EXPECT_NEAR(integral, 0.25, 1e-14);
  }
}

TEST(DiscretizeTest, IdempotentOnAlignedCustomGrids) {
  const CustomGridKernel custom{{0.25, 0.25, 0.5},
                                {{0.1, 0.2, 0.3}, {0.2, 0.4, 0.5}, {0.3, 0.5, 0.9}}};
  const auto once = Discretize(custom, 8);
  const CustomGridKernel again{once.block_weights(), once.values()};
  const auto twice = Discretize(again, 8);
  ASSERT_EQ(once.blocks(), twice.blocks());
  for (std::size_t i = 0; i < once.flat_values().size(); ++i) {
    EXPECT_NEAR(once.flat_values()[i], twice.flat_values()[i], 1e-15);
  }
  // The values themselves are the grid values on aligned cells.
  EXPECT_NEAR(once.value(0, 7), 0.3, 1e-15);
  EXPECT_NEAR(once.value(2, 3), 0.4, 1e-15);
}

TEST(DiscretizeTest, ProductDegreeConvergesAtFirstOrder) {
  double previous = 0.0;
  for (int m : {8, 16, 32, 64, 128}) {
    const auto w = Discretize(ProductKernel{}, m);
    const auto degree = w.Degree();
    // Distance from the continuous degree x/2 evaluated at the cell edges,
    // the worst point inside each cell.
    double gap = 0.0;
    for (int c = 0; c < m; ++c) {
      gap = std::max(gap, std::abs(degree[c] - (c + 1.0) / m / 2.0));
      gap = std::max(gap, std::abs(degree[c] - static_cast<double>(c) / m / 2.0));
    }
    if (previous > 0.0) EXPECT_NEAR(gap / previous, 0.5, 1e-9);
    previous = gap;
  }
}

TEST(MaterializeTest, StepKernelsAreExact) {
  const auto tilde = Materialize(TwoBlockDiagonalKernel{0.5}, 256);
  EXPECT_EQ(tilde.blocks(), 2);
  const auto constant = Materialize(ConstantKernel{0.2}, 256);
  EXPECT_EQ(constant.blocks(), 1);
  EXPECT_EQ(Materialize(ProductKernel{}, 32).blocks(), 32);
  const auto custom = Materialize(CustomGridKernel{{0.3, 0.7}, {{1, 0}, {0, 1}}}, 9);
  EXPECT_EQ(custom.block_weights(), (std::vector<double>{0.3, 0.7}));
}

TEST(KernelSpecTest, Validation) {
  EXPECT_THROW(ValidateKernelSpec(ConstantKernel{1.5}), std::invalid_argument);
  EXPECT_THROW(ValidateKernelSpec(TwoBlockDiagonalKernel{-0.1}), std::invalid_argument);
  EXPECT_THROW(ValidateKernelSpec(CustomGridKernel{{1.0}, {{2.0}}}), std::invalid_argument);
  EXPECT_NO_THROW(ValidateKernelSpec(ProductKernel{}));
}

}  // namespace
}  // namespace graphonlab
