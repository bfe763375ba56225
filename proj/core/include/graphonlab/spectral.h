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

// Spectra of step-kernel integral operators (T_W f)(x) = int W(x, y) f(y) dy.

#ifndef GRAPHONLAB_SPECTRAL_H_
#define GRAPHONLAB_SPECTRAL_H_

#include <vector>

#include "graphonlab/density.h"
#include "graphonlab/graph.h"
#include "graphonlab/graphon.h"

namespace graphonlab {

inline constexpr double kDefaultEigenTruncation = 1e-10;
inline constexpr double kDefaultSpecMinusTolerance = 1e-8;

// Nonzero eigenvalues of T_W for a step kernel W, sorted in decreasing order,
// with block-constant eigenfunctions orthonormal in L^2[0,1].
struct Spectrum {
  std::vector<double> eigenvalues;
  // eigenvectors[i][block] is the value of the i-th eigenfunction on `block`.
  std::vector<std::vector<double>> eigenvectors;
  std::vector<double> block_weights;
};

// Eigenvalues and orthonormal eigenvectors of a dense symmetric matrix
// (row-major n x n) by cyclic Jacobi rotations. Eigenvalues are returned in
// decreasing order; column i of `vectors` (row-major) belongs to value i.
struct SymmetricEigen {
  std::vector<double> values;
  std::vector<double> vectors;
};
SymmetricEigen JacobiEigen(std::vector<double> matrix, int n);

// Diagonalizes D^{1/2} B D^{1/2} with D = diag(pi) and maps eigenvectors back
// through D^{-1/2}. Eigenvalues with |lambda| <= truncation are dropped.
Spectrum ComputeSpectrum(const StepGraphon& kernel,
                         double truncation = kDefaultEigenTruncation);

// d_{W_H} = v (v - 1) / (2 |Aut(H)|) * t(H, W). `regular` is false when W is
// not H-regular, in which case the value is advisory only: it is then not an
// eigenvalue of T_{W_H} in general.
struct DegreeEigenvalue {
  double value = 0.0;
  bool regular = false;
};
DegreeEigenvalue TwoPointDegree(
    const LabeledGraph& h, const StepGraphon& w,
    double regularity_tolerance = kDefaultRegularityTolerance);

// The eigenvalue multiset with one copy of the eigenvalue closest to d
// removed. Throws std::domain_error when no eigenvalue lies within
// `tolerance` of d.
std::vector<double> SpecMinus(const Spectrum& spectrum, double d,
                              double tolerance = kDefaultSpecMinusTolerance);
std::vector<double> SpecMinus(const std::vector<double>& eigenvalues, double d,
                              double tolerance = kDefaultSpecMinusTolerance);

}  // namespace graphonlab

#endif  // GRAPHONLAB_SPECTRAL_H_
