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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace graphonlab {
namespace {

// A table over an ordered list of pattern vertices (0-based), each ranging
// over the k blocks. Row-major, first vertex most significant.
struct Factor {
  std::vector<int> scope;
  std::vector<double> data;
};

std::int64_t TableSize(int k, std::size_t arity) {
  std::int64_t size = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (size > kMaxContractionEntries / k) {
      return std::numeric_limits<std::int64_t>::max();
    }
    size *= k;
  }
  return size;
}

std::vector<std::int64_t> Strides(int k, std::size_t arity) {
  std::vector<std::int64_t> strides(arity, 1);
  for (std::size_t i = arity; i-- > 1;) strides[i - 1] = strides[i] * k;
  return strides;
}

// Multiplies `factors` over `out_scope` (+ `summed` when >= 0), summing the
// `summed` vertex out against the block weights.
Factor Combine(const std::vector<const Factor*>& factors,
               const std::vector<int>& out_scope, int summed,
               const std::vector<double>& pi) {
  const int k = static_cast<int>(pi.size());
  const std::size_t arity = out_scope.size();
  Factor out{out_scope, std::vector<double>(TableSize(k, arity), 0.0)};

  // Stride of each output position (and of the summed vertex) inside each
  // factor; zero when the factor does not depend on that vertex.
  const std::size_t nf = factors.size();
  std::vector<std::int64_t> stride(nf * arity, 0);
  std::vector<std::int64_t> summed_stride(nf, 0);
  for (std::size_t f = 0; f < nf; ++f) {
    const auto& scope = factors[f]->scope;
    const std::vector<std::int64_t> own = Strides(k, scope.size());
    for (std::size_t s = 0; s < scope.size(); ++s) {
      auto it = std::find(out_scope.begin(), out_scope.end(), scope[s]);
      if (it != out_scope.end()) {
        stride[f * arity + (it - out_scope.begin())] = own[s];
      } else if (scope[s] == summed) {
        summed_stride[f] = own[s];
      }
    }
  }

  std::vector<int> digit(arity, 0);
  std::vector<std::int64_t> base(nf, 0);
  for (std::size_t entry = 0; entry < out.data.size(); ++entry) {
    for (std::size_t f = 0; f < nf; ++f) {
      std::int64_t offset = 0;
      for (std::size_t s = 0; s < arity; ++s) {
        offset += digit[s] * stride[f * arity + s];
      }
      base[f] = offset;
    }
    if (summed < 0) {
      double product = 1.0;
      for (std::size_t f = 0; f < nf && product != 0.0; ++f) {
        product *= factors[f]->data[base[f]];
      }
      out.data[entry] = product;
    } else {
      // Factors that do not see the summed vertex are constant in the inner
      // loop; a zero there prunes the whole sum.
      double outer = 1.0;
      for (std::size_t f = 0; f < nf; ++f) {
        if (summed_stride[f] == 0) outer *= factors[f]->data[base[f]];
      }
      if (outer != 0.0) {
        double sum = 0.0;
        for (int b = 0; b < k; ++b) {
          double term = pi[b];
          for (std::size_t f = 0; f < nf; ++f) {
            if (summed_stride[f] != 0) {
              term *= factors[f]->data[base[f] + b * summed_stride[f]];
            }
          }
          sum += term;
        }
        out.data[entry] = outer * sum;
      }
    }
    for (std::size_t s = arity; s-- > 0;) {
      if (++digit[s] < k) break;
      digit[s] = 0;
    }
  }
  return out;
}

// Sum over block assignments of the unmarked vertices of
//   prod_{unmarked v} pi(v) * prod_{edges} B^mult,
// returned as a table over the marked vertices in the given order.
Factor Contract(const MultiGraph& f, const std::vector<int>& marked,
                const StepGraphon& w) {
  const int v = f.vertex_count();
  const int k = w.blocks();
  const std::vector<double>& pi = w.block_weights();

  std::vector<Factor> pool;
  pool.reserve(f.edges().size());
  for (const auto& [edge, mult] : f.edges()) {
    Factor factor{{edge.first - 1, edge.second - 1},
                  std::vector<double>(static_cast<std::size_t>(k) * k)};
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        const double x = w.value(i, j);
        double power = x;
        for (int r = 1; r < mult; ++r) power *= x;
        factor.data[i * k + j] = power;
      }
    }
    pool.push_back(std::move(factor));
  }

  std::vector<bool> pending(v, true);
  for (int m : marked) pending[m] = false;
  double scale = 1.0;
  const double weight_total = std::accumulate(pi.begin(), pi.end(), 0.0);

  while (std::any_of(pending.begin(), pending.end(),
                     [](bool b) { return b; })) {
    // Pick the vertex whose elimination creates the smallest table.
    int best = -1;
    std::vector<int> best_scope;
    for (int u = 0; u < v; ++u) {
      if (!pending[u]) continue;
      std::vector<int> scope;
      for (const Factor& factor : pool) {
        if (std::find(factor.scope.begin(), factor.scope.end(), u) ==
            factor.scope.end()) {
          continue;
        }
        for (int x : factor.scope) {
          if (x != u && std::find(scope.begin(), scope.end(), x) == scope.end())
            scope.push_back(x);
        }
      }
      if (best < 0 || scope.size() < best_scope.size()) {
        best = u;
        best_scope = std::move(scope);
      }
    }
    pending[best] = false;

    std::vector<const Factor*> touching;
    std::vector<Factor> rest;
    for (Factor& factor : pool) {
      if (std::find(factor.scope.begin(), factor.scope.end(), best) !=
          factor.scope.end()) {
        touching.push_back(&factor);
      }
    }
    if (touching.empty()) {
      scale *= weight_total;
      continue;
    }
    std::sort(best_scope.begin(), best_scope.end());
    if (TableSize(k, best_scope.size() + 1) > kMaxContractionEntries) {
      throw std::invalid_argument(
          "pattern too large: density table would exceed the size limit for " +
          std::to_string(k) + " blocks");
    }
    Factor merged = Combine(touching, best_scope, best, pi);
    for (Factor& factor : pool) {
      if (std::find(factor.scope.begin(), factor.scope.end(), best) ==
          factor.scope.end()) {
        rest.push_back(std::move(factor));
      }
    }
    rest.push_back(std::move(merged));
    pool = std::move(rest);
  }

  if (TableSize(k, marked.size()) > kMaxContractionEntries) {
    throw std::invalid_argument("too many marked vertices for this partition");
  }
  std::vector<const Factor*> all;
  for (const Factor& factor : pool) all.push_back(&factor);
  Factor out = Combine(all, marked, -1, pi);
  if (scale != 1.0) {
    for (double& x : out.data) x *= scale;
  }
  return out;
}

void CheckPatternSize(int vertex_count) {
  if (vertex_count > kMaxDensityPatternVertices) {
    throw std::invalid_argument("pattern has " + std::to_string(vertex_count) +
                                " vertices; density routines accept at most " +
                                std::to_string(kMaxDensityPatternVertices));
  }
}

}  // namespace

double ConditionalDensity::At(std::span<const int> block_index) const {
  std::size_t offset = 0;
  for (int b : block_index) offset = offset * blocks + b;
  return values.at(offset);
}

double ConditionalDensity::Average(std::span<const double> block_weights) const {
  const std::size_t arity = marks.size();
  std::vector<int> digit(arity, 0);
  double total = 0.0;
  for (double value : values) {
    double weight = 1.0;
    for (int d : digit) weight *= block_weights[d];
    total += weight * value;
    for (std::size_t s = arity; s-- > 0;) {
      if (++digit[s] < blocks) break;
      digit[s] = 0;
    }
  }
  return total;
}

const char* DegeneracyName(Degeneracy d) {
  switch (d) {
    case Degeneracy::kNone:
      return "none";
    case Degeneracy::kComplete:
      return "complete";
    case Degeneracy::kPatternFree:
      return "pattern_free";
  }
  return "unknown";
}

double HomDensity(const MultiGraph& f, const StepGraphon& w) {
  CheckPatternSize(f.vertex_count());
  return Contract(f, {}, w).data.at(0);
}

double HomDensity(const LabeledGraph& f, const StepGraphon& w) {
  return HomDensity(MultiGraph(f), w);
}

ConditionalDensity ConditionalHomDensity(const MultiGraph& h,
                                         std::span<const int> marks,
                                         const StepGraphon& w) {
  CheckPatternSize(h.vertex_count());
  if (marks.empty()) {
    throw std::invalid_argument("conditional density needs at least one mark");
  }
  std::vector<int> zero_based;
  std::vector<bool> seen(h.vertex_count() + 1, false);
  for (int a : marks) {
    if (a < 1 || a > h.vertex_count()) {
      throw std::invalid_argument("mark " + std::to_string(a) +
                                  " is not a vertex of the pattern");
    }
    if (seen[a]) throw std::invalid_argument("duplicate mark");
    seen[a] = true;
    zero_based.push_back(a - 1);
  }
  Factor table = Contract(h, zero_based, w);
  return ConditionalDensity{std::vector<int>(marks.begin(), marks.end()),
                            w.blocks(), std::move(table.data)};
}

ConditionalDensity ConditionalHomDensity(const LabeledGraph& h,
                                         std::span<const int> marks,
                                         const StepGraphon& w) {
  return ConditionalHomDensity(MultiGraph(h), marks, w);
}

std::vector<std::vector<double>> OnePointDensities(const LabeledGraph& h,
                                                   const StepGraphon& w) {
  std::vector<std::vector<double>> result;
  result.reserve(h.vertex_count());
  for (int a = 1; a <= h.vertex_count(); ++a) {
    const int mark[] = {a};
    result.push_back(ConditionalHomDensity(h, mark, w).values);
  }
  return result;
}

double FallingFactorial(std::int64_t n, int v) {
  double result = 1.0;
  for (int i = 0; i < v; ++i) result *= static_cast<double>(n - i);
  return result;
}

double MeanCount(const LabeledGraph& h, double density, std::int64_t n) {
  if (n < h.vertex_count()) {
    throw std::invalid_argument("mean count needs n >= |V(H)|");
  }
  return FallingFactorial(n, h.vertex_count()) /
         static_cast<double>(AutomorphismCount(h)) * density;
}

double MeanCount(const LabeledGraph& h, const StepGraphon& w, std::int64_t n) {
  if (n < h.vertex_count()) {
    throw std::invalid_argument("mean count needs n >= |V(H)|");
  }
  return MeanCount(h, HomDensity(h, w), n);
}

RegularityReport RegularityDefect(const LabeledGraph& h, const StepGraphon& w) {
  if (!w.IsGraphon()) {
    throw std::invalid_argument(
        "regularity is defined for graphons with values in [0,1]");
  }
  RegularityReport report;
  report.density = HomDensity(h, w);
  const auto one_point = OnePointDensities(h, w);
  const int v = h.vertex_count();
  report.averaged.assign(w.blocks(), 0.0);
  for (int b = 0; b < w.blocks(); ++b) {
    double sum = 0.0;
    for (int a = 0; a < v; ++a) sum += one_point[a][b];
    report.averaged[b] = sum / v;
    report.defect =
        std::max(report.defect, std::abs(report.averaged[b] - report.density));
  }
  if (w.IsComplete()) {
    report.degeneracy = Degeneracy::kComplete;
  } else if (report.density == 0.0) {
    report.degeneracy = Degeneracy::kPatternFree;
  }
  return report;
}

StepGraphon TwoPointGraphon(const LabeledGraph& h, const StepGraphon& w) {
  const int v = h.vertex_count();
  if (v < 2) throw std::invalid_argument("two-point graphon needs |V(H)| >= 2");
  CheckPatternSize(v);
  const int k = w.blocks();
  // sum_{a != b} t_(a,b)(x, y) = sum_{a < b} [t_(a,b)(x, y) + t_(a,b)(y, x)],
  // which is symmetric by construction.
  std::vector<double> sum(static_cast<std::size_t>(k) * k, 0.0);
  for (int a = 1; a <= v; ++a) {
    for (int b = a + 1; b <= v; ++b) {
      const int marks[] = {a, b};
      const ConditionalDensity t = ConditionalHomDensity(h, marks, w);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          sum[i * k + j] += t.values[i * k + j] + t.values[j * k + i];
        }
      }
    }
  }
  const double scale = 1.0 / (2.0 * static_cast<double>(AutomorphismCount(h)));
  std::vector<std::vector<double>> values(k, std::vector<double>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) values[i][j] = scale * sum[i * k + j];
  }
  return StepGraphon(w.block_weights(), std::move(values));
}

}  // namespace graphonlab
