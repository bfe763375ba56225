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

// Step graphons and the parametric kernels that can be turned into them.

#ifndef GRAPHONLAB_GRAPHON_H_
#define GRAPHONLAB_GRAPHON_H_

#include <variant>
#include <vector>

namespace graphonlab {

// Piecewise-constant symmetric kernel on [0,1]^2: block i has length pi[i]
// and the kernel equals values[i][j] on block i x block j.
//
// The same type carries derived kernels (such as the two-point conditional
// graphon) whose values may exceed 1; IsGraphon() tells the two apart.
class StepGraphon {
 public:
  // Throws std::invalid_argument unless every weight is positive, the weights
  // sum to 1 within 1e-12, and `values` is a square, exactly symmetric matrix
  // of finite reals matching the number of blocks.
  StepGraphon(std::vector<double> block_weights,
              std::vector<std::vector<double>> values);

  int blocks() const { return static_cast<int>(pi_.size()); }
  const std::vector<double>& block_weights() const { return pi_; }
  double value(int i, int j) const { return values_[i * blocks() + j]; }
  // Row-major k x k.
  const std::vector<double>& flat_values() const { return values_; }
  std::vector<std::vector<double>> values() const;

  // All values in [0,1].
  bool IsGraphon() const;
  // Every value equals 1.
  bool IsComplete() const;

  // Index of the block containing x; x = 1 belongs to the last block.
  int BlockOf(double x) const;
  // Throws std::out_of_range for x or y outside [0,1].
  double Evaluate(double x, double y) const;

  // d(x) = integral of W(x, y) dy, one value per block.
  std::vector<double> Degree() const;

  // Left endpoints of the blocks followed by 1.
  std::vector<double> Breakpoints() const;

  friend bool operator==(const StepGraphon&, const StepGraphon&) = default;

 private:
  std::vector<double> pi_;
  std::vector<double> values_;
};

struct ConstantKernel {
  double p;
};
// W(x, y) = x y.
struct ProductKernel {};
// p on [0,1/2]^2 and [1/2,1]^2, zero elsewhere.
struct TwoBlockDiagonalKernel {
  double p;
};
struct CustomGridKernel {
  std::vector<double> block_weights;
  std::vector<std::vector<double>> values;
};

using KernelSpec = std::variant<ConstantKernel, ProductKernel,
                                TwoBlockDiagonalKernel, CustomGridKernel>;

// Throws std::invalid_argument for parameters outside [0,1] or an invalid
// custom grid.
void ValidateKernelSpec(const KernelSpec& spec);

// Uniform m-block step graphon whose value on each cell is the exact average
// of the kernel over that cell.
StepGraphon Discretize(const KernelSpec& spec, int m);

// Exact step representation when the kernel already is a step function;
// analytic kernels go through Discretize(spec, m).
StepGraphon Materialize(const KernelSpec& spec, int m);

}  // namespace graphonlab

#endif  // GRAPHONLAB_GRAPHON_H_
