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

#include "graphonlab/spectral.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace graphonlab {
namespace {

constexpr int kMaxJacobiSweeps = 100;

}  // namespace

SymmetricEigen JacobiEigen(std::vector<double> a, int n) {
  if (n < 0 || a.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("Jacobi: matrix size mismatch");
  }
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

  auto at = [n](std::vector<double>& m, int i, int j) -> double& {
    return m[static_cast<std::size_t>(i) * n + j];
  };

  double scale = 0.0;
  for (double x : a) scale = std::max(scale, std::abs(x));

  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += at(a, p, q) * at(a, p, q);
    }
    if (off == 0.0 || std::sqrt(off) <= 1e-15 * scale) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(a, p, q);
        if (apq == 0.0) continue;
        const double app = at(a, p, p);
        const double aqq = at(a, q, q);
        // Rotation angle zeroing a(p, q), in the stable form of Golub-Van Loan.
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int r = 0; r < n; ++r) {
          const double arp = at(a, r, p);
          const double arq = at(a, r, q);
          at(a, r, p) = c * arp - s * arq;
          at(a, r, q) = s * arp + c * arq;
        }
        for (int r = 0; r < n; ++r) {
          const double apr = at(a, p, r);
          const double aqr = at(a, q, r);
          at(a, p, r) = c * apr - s * aqr;
          at(a, q, r) = s * apr + c * aqr;
        }
        at(a, p, q) = at(a, q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          const double vrp = at(v, r, p);
          const double vrq = at(v, r, q);
          at(v, r, p) = c * vrp - s * vrq;
          at(v, r, q) = s * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return at(a, i, i) > at(a, j, j);
  });
  SymmetricEigen out;
  out.values.resize(n);
  out.vectors.resize(static_cast<std::size_t>(n) * n);
  for (int col = 0; col < n; ++col) {
    const int src = order[col];
    out.values[col] = at(a, src, src);
    // Sign convention: the largest-magnitude component is positive.
    int pivot = 0;
    for (int r = 1; r < n; ++r) {
      if (std::abs(at(v, r, src)) > std::abs(at(v, pivot, src)) + 1e-12) {
        pivot = r;
      }
    }
    const double sign = at(v, pivot, src) < 0.0 ? -1.0 : 1.0;
    for (int r = 0; r < n; ++r) {
      out.vectors[static_cast<std::size_t>(r) * n + col] = sign * at(v, r, src);
    }
  }
  return out;
}

Spectrum ComputeSpectrum(const StepGraphon& kernel, double truncation) {
  const int k = kernel.blocks();
  const std::vector<double>& pi = kernel.block_weights();
  std::vector<double> root(k);
  for (int i = 0; i < k; ++i) root[i] = std::sqrt(pi[i]);
  std::vector<double> m(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      m[i * k + j] = root[i] * kernel.value(i, j) * root[j];
    }
  }
  // Exact symmetry of the input matrix gives exact symmetry here as well.
  const SymmetricEigen eig = JacobiEigen(std::move(m), k);

  Spectrum spectrum;
  spectrum.block_weights = pi;
  for (int col = 0; col < k; ++col) {
    if (std::abs(eig.values[col]) <= truncation) continue;
    spectrum.eigenvalues.push_back(eig.values[col]);
    std::vector<double> phi(k);
    for (int i = 0; i < k; ++i) phi[i] = eig.vectors[i * k + col] / root[i];
    spectrum.eigenvectors.push_back(std::move(phi));
  }
  return spectrum;
}

DegreeEigenvalue TwoPointDegree(const LabeledGraph& h, const StepGraphon& w,
                                double regularity_tolerance) {
  const double v = h.vertex_count();
  const double aut = static_cast<double>(AutomorphismCount(h));
  DegreeEigenvalue out;
  out.value = v * (v - 1.0) / (2.0 * aut) * HomDensity(h, w);
  out.regular = RegularityDefect(h, w).IsRegular(regularity_tolerance);
  return out;
}

std::vector<double> SpecMinus(const std::vector<double>& eigenvalues, double d,
                              double tolerance) {
  std::size_t closest = eigenvalues.size();
  double gap = tolerance;
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    const double delta = std::abs(eigenvalues[i] - d);
    if (delta <= gap) {
      gap = delta;
      closest = i;
    }
  }
  if (closest == eigenvalues.size()) {
    throw std::domain_error(
        "no eigenvalue within tolerance of the degree eigenvalue " +
        std::to_string(d) + "; the graphon is not regular for this pattern");
  }
  std::vector<double> rest;
  rest.reserve(eigenvalues.size() - 1);
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    if (i != closest) rest.push_back(eigenvalues[i]);
  }
  return rest;
}

std::vector<double> SpecMinus(const Spectrum& spectrum, double d,
                              double tolerance) {
  return SpecMinus(spectrum.eigenvalues, d, tolerance);
}

}  // namespace graphonlab
