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

// Both sides of the combinatorial identities linking joins of H with joins
// of its labeled copies, and alternate evaluation paths for the variance
// constants. Used by the unit tests and the acceptance binary.

#ifndef GRAPHONLAB_TESTS_SUPPORT_IDENTITIES_H_
#define GRAPHONLAB_TESTS_SUPPORT_IDENTITIES_H_

#include "graphonlab/graph.h"
#include "graphonlab/graphon.h"

namespace graphonlab::testing {

struct Sides {
  double lhs = 0.0;
  double rhs = 0.0;
};

// lhs = |G_H|^2 sum_{a,b} t(H +_{a,b} H, W)
// rhs = |V(H)|^2 sum_{H1,H2 in G_H} t(H1 +_{1,1} H2, W).
Sides VertexJoinIdentity(const LabeledGraph& h, const StepGraphon& w);

enum class EdgeJoinKind { kWeak, kStrong };
enum class PairReading {
  // (a, b) ranges over ordered pairs with a != b.
  kOrdered,
  // (a, b) ranges over pairs with a < b only.
  kIncreasing,
};

// lhs = sum_{(a,b),(c,d)} sum_{H1,H2 in G_H} t_(H1 join_{(a,b),(c,d)} H2, W)
// rhs = |G_H|^2 sum_{(a,b),(c,d)} t_(H join_{(a,b),(c,d)} H, W)
// where t_ is zero unless (a,b) is an edge of the first graph and (c,d) an
// edge of the second. The join identifies a with c and b with d.
Sides EdgeJoinIdentity(const LabeledGraph& h, const StepGraphon& w,
                       EdgeJoinKind kind, PairReading reading);

// Largest |integral of t_a t_b - t(H +_{a,b} H, W)| over all (a, b).
double VertexJoinConsistencyGap(const LabeledGraph& h, const StepGraphon& w);

// (1/|Aut|^2) [ integral (sum_a t_a)^2 - v^2 t^2 ].
double TauSquaredFromOnePoint(const LabeledGraph& h, const StepGraphon& w);

// Variance of the (1,2) edge projection written as a sum over labeled copies
// containing the edge (1,2), divided by 2 (v-2)!^2. Equals the edge-pair
// formula for sigma^2 whenever the orientation of the pairs does not matter.
double SigmaSquaredFromCopies(const LabeledGraph& h, const StepGraphon& w);

}  // namespace graphonlab::testing

#endif  // GRAPHONLAB_TESTS_SUPPORT_IDENTITIES_H_
