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

#include "graphonlab/limits.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "graphonlab/random.h"

namespace graphonlab {
namespace {

double ClampVariance(double value, const char* what) {
  if (value >= 0.0) return value;
  if (value >= -kNegativeVarianceSlack) return 0.0;
  throw std::logic_error(std::string(what) + " evaluated to " +
                         std::to_string(value) + " < 0");
}

}  // namespace

double ScaleExponent(const LimitLaw& law) {
  return std::visit([](const auto& l) { return l.scale_exponent; }, law);
}

bool IsMixture(const LimitLaw& law) {
  return std::holds_alternative<MixtureLaw>(law);
}

double LawVariance(const LimitLaw& law) {
  if (const auto* g = std::get_if<GaussianLaw>(&law)) return g->tau2;
  const auto& m = std::get<MixtureLaw>(law);
  double total = m.sigma2;
  for (double l : m.lambdas) total += 2.0 * l * l;
  return total;
}

double TauSquared(const LabeledGraph& h, const StepGraphon& w) {
  const int v = h.vertex_count();
  const double t = HomDensity(h, w);
  double joined = 0.0;
  for (int a = 1; a <= v; ++a) {
    for (int b = 1; b <= v; ++b) joined += HomDensity(VertexJoin(h, a, h, b), w);
  }
  const double aut = static_cast<double>(AutomorphismCount(h));
  return ClampVariance((joined - v * v * t * t) / (aut * aut), "tau^2");
}

double SigmaSquared(const LabeledGraph& h, const StepGraphon& w) {
  double sum = 0.0;
  for (const Edge& e1 : h.edges()) {
    for (const Edge& e2 : h.edges()) {
      sum += HomDensity(WeakEdgeJoin(h, e1, h, e2), w) -
             HomDensity(StrongEdgeJoin(h, e1, h, e2), w);
    }
  }
  const double aut = static_cast<double>(AutomorphismCount(h));
  return ClampVariance(2.0 * sum / (aut * aut), "sigma^2");
}

LimitAnalysis AnalyzeLimit(const LabeledGraph& h, const StepGraphon& w,
                           double regularity_tolerance) {
  if (h.edge_count() == 0) {
    throw std::invalid_argument("limit law needs a pattern with an edge");
  }
  LimitAnalysis out;
  out.regularity = RegularityDefect(h, w);
  if (out.regularity.degeneracy == Degeneracy::kComplete) {
    throw DegenerateGraphonError(
        Degeneracy::kComplete,
        "degenerate input: W is complete (W == 1), so X_n is deterministic");
  }
  if (out.regularity.degeneracy == Degeneracy::kPatternFree) {
    throw DegenerateGraphonError(
        Degeneracy::kPatternFree,
        "degenerate input: t(H, W) = 0, so X_n = 0 almost surely");
  }
  out.regular = out.regularity.IsRegular(regularity_tolerance);
  out.tau2 = TauSquared(h, w);
  out.sigma2 = SigmaSquared(h, w);
  const double v = h.vertex_count();
  const double aut = static_cast<double>(AutomorphismCount(h));
  out.degree_eigenvalue.value =
      v * (v - 1.0) / (2.0 * aut) * out.regularity.density;
  out.degree_eigenvalue.regular = out.regular;

  if (!out.regular) {
    out.law = GaussianLaw{out.tau2, v - 0.5};
  } else {
    out.two_point_spectrum = ComputeSpectrum(TwoPointGraphon(h, w));
    out.spec_minus =
        SpecMinus(*out.two_point_spectrum, out.degree_eigenvalue.value);
    out.law = MixtureLaw{out.sigma2, *out.spec_minus, v - 1.0};
  }
  return out;
}

LimitLaw ComputeLimitLaw(const LabeledGraph& h, const StepGraphon& w,
                         double regularity_tolerance) {
  return AnalyzeLimit(h, w, regularity_tolerance).law;
}

double SampleLimitDraw(const LimitLaw& law, std::uint64_t seed,
                       std::uint64_t index) {
  CounterRng rng(SplitKey(seed, index));
  if (const auto* g = std::get_if<GaussianLaw>(&law)) {
    return std::sqrt(g->tau2) * rng.Normal();
  }
  const auto& m = std::get<MixtureLaw>(law);
  double x = std::sqrt(m.sigma2) * rng.Normal();
  for (double l : m.lambdas) {
    const double z = rng.Normal();
    x += l * (z * z - 1.0);
  }
  return x;
}

std::vector<double> SampleLimit(const LimitLaw& law, std::uint64_t seed,
                                std::size_t count) {
  if (count < 1) throw std::invalid_argument("sample count must be >= 1");
  std::vector<double> draws(count);
  for (std::size_t i = 0; i < count; ++i) draws[i] = SampleLimitDraw(law, seed, i);
  return draws;
}

}  // namespace graphonlab
