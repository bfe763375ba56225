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

#include "selftest.h"

#include <cmath>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "graphonlab/density.h"
#include "graphonlab/graph.h"
#include "graphonlab/graphon.h"
#include "graphonlab/limits.h"
#include "graphonlab/simulate.h"
#include "graphonlab/spectral.h"

namespace graphonlab::tools {
namespace {

struct Check {
  std::string name;
  double got;
  double want;
  double tolerance;
};

// t(F, W) for the discretized product kernel factorizes over vertices:
// sum_i pi_i m_i^deg(v) per vertex, m_i the cell mean of x.
double SeparableProductDensity(const LabeledGraph& f, int m) {
  double result = 1.0;
  for (int degree : f.Degrees()) {
    double moment = 0.0;
    for (int c = 0; c < m; ++c) {
      moment += std::pow((2.0 * c + 1.0) / (2.0 * m), degree) / m;
    }
    result *= moment;
  }
  return result;
}

}  // namespace

bool RunSelfTest(std::ostream& out) {
  const LabeledGraph k2 = patterns::Complete(2);
  const LabeledGraph k3 = patterns::Complete(3);
  const LabeledGraph k12 = patterns::Star(2);
  std::vector<Check> checks;

  checks.push_back({"|Aut(K3)| = 6",
                    static_cast<double>(AutomorphismCount(k3)), 6, 0});
  checks.push_back({"|Aut(K_{1,2})| = 2",
                    static_cast<double>(AutomorphismCount(k12)), 2, 0});
  checks.push_back({"|Aut(P_4)| = 2",
                    static_cast<double>(AutomorphismCount(patterns::Path(4))),
                    2, 0});
  checks.push_back({"copies of K3 in K4",
                    static_cast<double>(CountCopies(k3, patterns::Complete(4))),
                    4, 0});

  for (double p : {0.3, 0.5, 0.9}) {
    const StepGraphon w = Materialize(TwoBlockDiagonalKernel{p}, 2);
    const std::string tag = " (p=" + FormatDouble(p) + ")";
    checks.push_back({"t(K_{1,2}, two_block)" + tag, HomDensity(k12, w),
                      p * p / 4, 1e-12});
    const StepGraphon wh = TwoPointGraphon(k12, w);
    checks.push_back({"W_H diagonal" + tag, wh.value(0, 0), 3 * p * p / 4,
                      1e-12});
    checks.push_back({"W_H off-diagonal" + tag, wh.value(0, 1), 0, 1e-12});
    checks.push_back({"sigma2(K_{1,2}, two_block)" + tag, SigmaSquared(k12, w),
                      p * p * p * (1 - p) / 4, 1e-12});
    const Spectrum s = ComputeSpectrum(wh);
    checks.push_back({"#Spec(W_H)" + tag,
                      static_cast<double>(s.eigenvalues.size()), 2, 0});
    for (double lambda : s.eigenvalues) {
      checks.push_back({"Spec(W_H) entry" + tag, lambda, 3 * p * p / 8, 1e-10});
    }
    const auto rest = SpecMinus(s, TwoPointDegree(k12, w).value);
    checks.push_back({"Spec^-(W_H)" + tag, rest.size() == 1 ? rest[0] : NAN,
                      3 * p * p / 8, 1e-10});
    checks.push_back({"regularity defect (two_block, K_{1,2})" + tag,
                      RegularityDefect(k12, w).defect, 0, 1e-10});
  }
  for (double p : {0.2, 0.5}) {
    const StepGraphon w = Materialize(ConstantKernel{p}, 1);
    const std::string tag = " (p=" + FormatDouble(p) + ")";
    checks.push_back({"sigma2(K3, constant)" + tag, SigmaSquared(k3, w),
                      std::pow(p, 5) * (1 - p) / 2, 1e-12});
    checks.push_back({"tau2(K3, constant)" + tag, TauSquared(k3, w), 0, 1e-12});
    checks.push_back({"E X_4(K3, constant)" + tag, MeanCount(k3, w, 4),
                      4 * p * p * p, 1e-12});
    checks.push_back({"E X_3(K2, constant)" + tag, MeanCount(k2, w, 3), 3 * p,
                      1e-12});
  }
  const StepGraphon product = Discretize(ProductKernel{}, 64);
  checks.push_back({"t(K_{1,2}, product m=64)", HomDensity(k12, product),
                    SeparableProductDensity(k12, 64), 1e-13});
  checks.push_back({"t(K3, product m=64)", HomDensity(k3, product),
                    SeparableProductDensity(k3, 64), 1e-13});
  const double a[] = {1, 2};
  const double b[] = {1.5, 2.5};
  checks.push_back({"KS({1,2}, {1.5,2.5})", KsDistance(a, b), 0.5, 0});

  bool all = true;
  for (const Check& c : checks) {
    const bool ok = std::abs(c.got - c.want) <= c.tolerance;
    all = all && ok;
    out << (ok ? "PASS " : "FAIL ") << c.name << ": got "
        << FormatDouble(c.got) << ", want " << FormatDouble(c.want) << "\n";
  }
  out << (all ? "selftest passed" : "selftest FAILED") << " (" << checks.size()
      << " checks)\n";
  return all;
}

}  // namespace graphonlab::tools
