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

// Limit constants of the centered subgraph count X_n(H, W) and the limiting
// laws they define.
//
// When W is not H-regular,
//   (X_n - E X_n) / n^{v - 1/2}  ->  N(0, tau2),
// and when W is H-regular,
//   (X_n - E X_n) / n^{v - 1}    ->  sigma Z + sum_l l (Z_l^2 - 1),
// the sum running over the spectrum of the two-point conditional graphon
// with one copy of its degree eigenvalue removed.

#ifndef GRAPHONLAB_LIMITS_H_
#define GRAPHONLAB_LIMITS_H_

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "graphonlab/density.h"
#include "graphonlab/graph.h"
#include "graphonlab/graphon.h"
#include "graphonlab/spectral.h"

namespace graphonlab {

// Rounding slack below zero tolerated (and clamped) in variance constants.
inline constexpr double kNegativeVarianceSlack = 1e-10;

struct GaussianLaw {
  double tau2 = 0.0;
  double scale_exponent = 0.0;
};

struct MixtureLaw {
  double sigma2 = 0.0;
  std::vector<double> lambdas;
  double scale_exponent = 0.0;
};

using LimitLaw = std::variant<GaussianLaw, MixtureLaw>;

double ScaleExponent(const LimitLaw& law);
// tau2 for the Gaussian law, sigma2 + 2 sum lambda^2 for the mixture.
double LawVariance(const LimitLaw& law);
bool IsMixture(const LimitLaw& law);

// tau2 = [sum_{a,b} t(H +_{a,b} H, W) - v^2 t(H, W)^2] / |Aut(H)|^2, using
// vertex joins. Throws std::logic_error for a value below
// -kNegativeVarianceSlack.
double TauSquared(const LabeledGraph& h, const StepGraphon& w);

// sigma2 = 2 / |Aut(H)|^2 * sum over ordered pairs of edges (a,b), (c,d) of
// t(weak join) - t(strong join).
double SigmaSquared(const LabeledGraph& h, const StepGraphon& w);

// Every constant entering the limit law, for reporting.
struct LimitAnalysis {
  RegularityReport regularity;
  bool regular = false;
  double tau2 = 0.0;
  double sigma2 = 0.0;
  DegreeEigenvalue degree_eigenvalue;
  // Spectrum of W_H and its reduction; present only in the regular case.
  std::optional<Spectrum> two_point_spectrum;
  std::optional<std::vector<double>> spec_minus;
  LimitLaw law;
};

// Throws DegenerateGraphonError for complete or H-free W.
LimitAnalysis AnalyzeLimit(
    const LabeledGraph& h, const StepGraphon& w,
    double regularity_tolerance = kDefaultRegularityTolerance);

// Gaussian(tau2) with exponent v - 1/2 when the regularity defect exceeds the
// tolerance, otherwise the chi-square mixture with exponent v - 1.
LimitLaw ComputeLimitLaw(
    const LabeledGraph& h, const StepGraphon& w,
    double regularity_tolerance = kDefaultRegularityTolerance);

// `count` independent draws from the law. Draw i uses its own random stream
// split from `seed`, so the output does not depend on how draws are batched.
std::vector<double> SampleLimit(const LimitLaw& law, std::uint64_t seed,
                                std::size_t count);
double SampleLimitDraw(const LimitLaw& law, std::uint64_t seed,
                       std::uint64_t index);

}  // namespace graphonlab

#endif  // GRAPHONLAB_LIMITS_H_
