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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace graphonlab {
namespace {

constexpr double kWeightSumTolerance = 1e-12;

void CheckProbability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " parameter " +
                                std::to_string(p) + " outside [0,1]");
  }
}

StepGraphon TwoBlockStep(double p) {
  return StepGraphon({0.5, 0.5}, {{p, 0.0}, {0.0, p}});
}

// Average of a step kernel over uniform cells of width 1/m.
StepGraphon AverageOverUniformCells(const StepGraphon& w, int m) {
  const std::vector<double> edges = w.Breakpoints();
  const int k = w.blocks();
  // overlap[c * k + i] = |cell c intersect block i| * m, i.e. the share of
  // cell c covered by block i.
  std::vector<double> share(static_cast<std::size_t>(m) * k, 0.0);
  for (int c = 0; c < m; ++c) {
    const double lo = static_cast<double>(c) / m;
    const double hi = static_cast<double>(c + 1) / m;
    for (int i = 0; i < k; ++i) {
      const double len = std::min(hi, edges[i + 1]) - std::max(lo, edges[i]);
      if (len > 0.0) share[c * k + i] = len * m;
    }
  }
  std::vector<std::vector<double>> values(m, std::vector<double>(m, 0.0));
  for (int c = 0; c < m; ++c) {
    for (int d = c; d < m; ++d) {
      double sum = 0.0;
      for (int i = 0; i < k; ++i) {
        const double si = share[c * k + i];
        if (si == 0.0) continue;
        for (int j = 0; j < k; ++j) {
          const double sj = share[d * k + j];
          if (sj != 0.0) sum += si * sj * w.value(i, j);
        }
      }
      values[c][d] = values[d][c] = sum;
    }
  }
  return StepGraphon(std::vector<double>(m, 1.0 / m), std::move(values));
}

}  // namespace

StepGraphon::StepGraphon(std::vector<double> block_weights,
                         std::vector<std::vector<double>> values)
    : pi_(std::move(block_weights)) {
  const std::size_t k = pi_.size();
  if (k == 0) throw std::invalid_argument("step graphon needs >= 1 block");
  double total = 0.0;
  for (double w : pi_) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("block weights must be positive");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > kWeightSumTolerance) {
    throw std::invalid_argument("block weights sum to " +
                                std::to_string(total) + ", expected 1");
  }
  if (values.size() != k) {
    throw std::invalid_argument("value matrix has wrong number of rows");
  }
  values_.reserve(k * k);
  for (const auto& row : values) {
    if (row.size() != k) {
      throw std::invalid_argument("value matrix has wrong number of columns");
    }
    for (double x : row) {
      if (!std::isfinite(x)) {
        throw std::invalid_argument("value matrix has non-finite entry");
      }
      values_.push_back(x);
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (values_[i * k + j] != values_[j * k + i]) {
        throw std::invalid_argument("value matrix is not symmetric");
      }
    }
  }
}

std::vector<std::vector<double>> StepGraphon::values() const {
  const int k = blocks();
  std::vector<std::vector<double>> rows(k);
  for (int i = 0; i < k; ++i) {
    rows[i].assign(values_.begin() + i * k, values_.begin() + (i + 1) * k);
  }
  return rows;
}

bool StepGraphon::IsGraphon() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](double x) { return x >= 0.0 && x <= 1.0; });
}

bool StepGraphon::IsComplete() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](double x) { return x == 1.0; });
}

int StepGraphon::BlockOf(double x) const {
  double right = 0.0;
  const int k = blocks();
  for (int i = 0; i + 1 < k; ++i) {
    right += pi_[i];
    if (x < right) return i;
  }
  return k - 1;
}

double StepGraphon::Evaluate(double x, double y) const {
  if (!(x >= 0.0 && x <= 1.0) || !(y >= 0.0 && y <= 1.0)) {
    throw std::out_of_range("graphon evaluated outside [0,1]^2");
  }
  return value(BlockOf(x), BlockOf(y));
}

std::vector<double> StepGraphon::Degree() const {
  const int k = blocks();
  std::vector<double> degree(k, 0.0);
  for (int i = 0; i < k; ++i) {
    // Summing deviations from the first entry keeps constant rows exact.
    const double base = value(i, 0);
    double deviation = 0.0;
    for (int j = 0; j < k; ++j) deviation += pi_[j] * (value(i, j) - base);
    degree[i] = base + deviation;
  }
  return degree;
}

std::vector<double> StepGraphon::Breakpoints() const {
  std::vector<double> points(pi_.size() + 1, 0.0);
  std::partial_sum(pi_.begin(), pi_.end(), points.begin() + 1);
  points.back() = 1.0;
  return points;
}

void ValidateKernelSpec(const KernelSpec& spec) {
  std::visit(
      [](const auto& kernel) {
        using T = std::decay_t<decltype(kernel)>;
        if constexpr (std::is_same_v<T, ConstantKernel>) {
          CheckProbability(kernel.p, "constant kernel");
        } else if constexpr (std::is_same_v<T, TwoBlockDiagonalKernel>) {
          CheckProbability(kernel.p, "two-block kernel");
        } else if constexpr (std::is_same_v<T, CustomGridKernel>) {
          const StepGraphon w(kernel.block_weights, kernel.values);
          if (!w.IsGraphon()) {
            throw std::invalid_argument("custom kernel values outside [0,1]");
          }
        }
      },
      spec);
}

StepGraphon Discretize(const KernelSpec& spec, int m) {
  if (m < 1) throw std::invalid_argument("discretization needs m >= 1");
  ValidateKernelSpec(spec);
  return std::visit(
      [m](const auto& kernel) -> StepGraphon {
        using T = std::decay_t<decltype(kernel)>;
        if constexpr (std::is_same_v<T, ConstantKernel>) {
          return StepGraphon(
              std::vector<double>(m, 1.0 / m),
              std::vector<std::vector<double>>(
                  m, std::vector<double>(m, kernel.p)));
        } else if constexpr (std::is_same_v<T, ProductKernel>) {
          // The average of x over [c/m, (c+1)/m] is (2c+1)/(2m).
          std::vector<double> mean(m);
          for (int c = 0; c < m; ++c) mean[c] = (2.0 * c + 1.0) / (2.0 * m);
          std::vector<std::vector<double>> values(m, std::vector<double>(m));
          for (int c = 0; c < m; ++c) {
            for (int d = 0; d < m; ++d) values[c][d] = mean[c] * mean[d];
          }
          return StepGraphon(std::vector<double>(m, 1.0 / m),
                             std::move(values));
        } else if constexpr (std::is_same_v<T, TwoBlockDiagonalKernel>) {
          return AverageOverUniformCells(TwoBlockStep(kernel.p), m);
        } else {
          return AverageOverUniformCells(
              StepGraphon(kernel.block_weights, kernel.values), m);
        }
      },
      spec);
}

StepGraphon Materialize(const KernelSpec& spec, int m) {
  ValidateKernelSpec(spec);
  return std::visit(
      [&spec, m](const auto& kernel) -> StepGraphon {
        using T = std::decay_t<decltype(kernel)>;
        if constexpr (std::is_same_v<T, ConstantKernel>) {
          return StepGraphon({1.0}, {{kernel.p}});
        } else if constexpr (std::is_same_v<T, TwoBlockDiagonalKernel>) {
          return TwoBlockStep(kernel.p);
        } else if constexpr (std::is_same_v<T, CustomGridKernel>) {
          return StepGraphon(kernel.block_weights, kernel.values);
        } else {
          return Discretize(spec, m);
        }
      },
      spec);
}

}  // namespace graphonlab
