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

// Homomorphism densities of (multi)graphs in step graphons, conditional
// densities with marked vertices, H-regularity, and the two-point
// conditional graphon.
//
// All quantities are computed exactly (up to rounding) by summing over block
// assignments. The sum is organized as a sequence of variable eliminations so
// that tree-like patterns cost O(v k^2) instead of O(k^v).

#ifndef GRAPHONLAB_DENSITY_H_
#define GRAPHONLAB_DENSITY_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphonlab/graph.h"
#include "graphonlab/graphon.h"

namespace graphonlab {

// Patterns beyond this many vertices are rejected by the density routines.
inline constexpr int kMaxDensityPatternVertices = 8;
// Largest intermediate table (in entries) the contraction may allocate.
inline constexpr std::int64_t kMaxContractionEntries = std::int64_t{1} << 25;

// Conditional density t_a(x, H, W) as a block tensor.
struct ConditionalDensity {
  std::vector<int> marks;
  int blocks = 0;
  // Row-major over the marks, first mark most significant.
  std::vector<double> values;

  double At(std::span<const int> block_index) const;
  // Integral against the block weights over every marked coordinate.
  double Average(std::span<const double> block_weights) const;
};

enum class Degeneracy {
  kNone,
  // W == 1 everywhere.
  kComplete,
  // t(H, W) == 0.
  kPatternFree,
};

const char* DegeneracyName(Degeneracy d);

// Raised where a computation is meaningless for complete or H-free graphons.
class DegenerateGraphonError : public std::runtime_error {
 public:
  DegenerateGraphonError(Degeneracy kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Degeneracy kind() const { return kind_; }

 private:
  Degeneracy kind_;
};

inline constexpr double kDefaultRegularityTolerance = 1e-10;

struct RegularityReport {
  // max over blocks of |mean_a t_a(x) - t(H, W)|.
  double defect = 0.0;
  double density = 0.0;
  // Vertex-averaged one-point density, one value per block.
  std::vector<double> averaged;
  Degeneracy degeneracy = Degeneracy::kNone;

  bool degenerate() const { return degeneracy != Degeneracy::kNone; }
  bool IsRegular(double tolerance = kDefaultRegularityTolerance) const {
    return defect <= tolerance;
  }
};

// t(F, W). Values may exceed 1 when W is a derived kernel.
double HomDensity(const MultiGraph& f, const StepGraphon& w);
double HomDensity(const LabeledGraph& f, const StepGraphon& w);

// t_a(x, H, W) for the ordered, distinct marks a = (a_1, ..., a_K).
ConditionalDensity ConditionalHomDensity(const MultiGraph& h,
                                         std::span<const int> marks,
                                         const StepGraphon& w);
ConditionalDensity ConditionalHomDensity(const LabeledGraph& h,
                                         std::span<const int> marks,
                                         const StepGraphon& w);

// One-point densities t_a(x, H, W) for a = 1..|V(H)|; result[a - 1][block].
std::vector<std::vector<double>> OnePointDensities(const LabeledGraph& h,
                                                   const StepGraphon& w);

// E X_n(H, W) = (n)_v / |Aut(H)| * t(H, W). Throws if n < |V(H)|.
double MeanCount(const LabeledGraph& h, const StepGraphon& w, std::int64_t n);
// Same, with t(H, W) supplied by the caller.
double MeanCount(const LabeledGraph& h, double density, std::int64_t n);

// Falling factorial (n)_v as a double.
double FallingFactorial(std::int64_t n, int v);

// Deviation of the vertex-averaged one-point density from t(H, W). Complete
// and H-free graphons are reported through `degeneracy`, never as a silent
// zero. Throws std::invalid_argument unless W takes values in [0,1].
RegularityReport RegularityDefect(const LabeledGraph& h, const StepGraphon& w);

// W_H(x, y) = 1/(2|Aut(H)|) sum over ordered a != b of t_(a,b)((x, y), H, W),
// on W's partition. Requires |V(H)| >= 2.
StepGraphon TwoPointGraphon(const LabeledGraph& h, const StepGraphon& w);

}  // namespace graphonlab

#endif  // GRAPHONLAB_DENSITY_H_
