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

// Finite pattern graphs, multigraphs, automorphisms, the three join
// operations and copy counting in host graphs.
//
// Vertices are labeled 1..vertex_count throughout the public API. Edges are
// stored as unordered pairs normalized to (a, b) with a < b.

#ifndef GRAPHONLAB_GRAPH_H_
#define GRAPHONLAB_GRAPH_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace graphonlab {

using Edge = std::pair<int, int>;

// Largest pattern accepted by the brute-force automorphism counter.
inline constexpr int kMaxAutomorphismVertices = 10;
// Largest pattern accepted by CountCopies.
inline constexpr int kMaxCountPatternVertices = 8;

// Simple undirected graph on vertices 1..vertex_count. Immutable.
class LabeledGraph {
 public:
  // Throws std::invalid_argument on self-loops, duplicate edges (in either
  // orientation), out-of-range endpoints or vertex_count < 1.
  LabeledGraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  // Sorted, each pair with first < second.
  const std::vector<Edge>& edges() const { return edges_; }

  bool HasEdge(int a, int b) const;
  // Degree of every vertex; index 0 is vertex 1.
  std::vector<int> Degrees() const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
};

// Undirected loopless multigraph. Immutable.
class MultiGraph {
 public:
  struct WeightedEdge {
    Edge edge;
    int multiplicity;
    friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
  };

  // Parallel entries for the same pair are merged by adding multiplicities.
  // Throws std::invalid_argument on self-loops, out-of-range endpoints or
  // multiplicities < 1.
  MultiGraph(int vertex_count, std::vector<WeightedEdge> edges);
  // Every edge with multiplicity 1.
  explicit MultiGraph(const LabeledGraph& graph);

  int vertex_count() const { return vertex_count_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  int Multiplicity(int a, int b) const;
  int TotalMultiplicity() const;
  // Drops multiplicities.
  LabeledGraph Simplified() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  int vertex_count_;
  std::vector<WeightedEdge> edges_;
};

namespace patterns {

// K_r on vertices 1..r.
LabeledGraph Complete(int r);
// K_{1,leaves}: center is vertex 1, leaves are 2..leaves+1.
LabeledGraph Star(int leaves);
// Path with `edges` edges: 1-2-...-(edges+1).
LabeledGraph Path(int edges);
// Graph on n vertices without edges.
LabeledGraph Empty(int n);

}  // namespace patterns

// Number of permutations of V(H) preserving adjacency, by enumeration of all
// |V(H)|! permutations. Throws std::invalid_argument if H has more than
// `max_vertices` vertices.
std::int64_t AutomorphismCount(const LabeledGraph& h,
                               int max_vertices = kMaxAutomorphismVertices);

// All distinct edge sets on the labels in `vertex_set` forming a graph
// isomorphic to H. Each edge set is sorted. The result has
// |V(H)|! / |Aut(H)| entries. Throws if |vertex_set| != |V(H)| or the labels
// are not distinct.
std::vector<std::vector<Edge>> CopySet(const LabeledGraph& h,
                                       std::span<const int> vertex_set);
// CopySet on {1, ..., |V(H)|}, wrapped as graphs.
std::vector<LabeledGraph> CanonicalCopies(const LabeledGraph& h);

// Joins. The result lists H1's vertices first with their original labels,
// followed by H2's remaining vertices in increasing label order.

// Identifies vertex a of H1 with vertex b of H2.
LabeledGraph VertexJoin(const LabeledGraph& h1, int a, const LabeledGraph& h2,
                        int b);
// Identifies e1.first with e2.first and e1.second with e2.second and keeps one
// copy of the shared edge. The identification follows the order of the pairs
// as given; both pairs must be edges.
LabeledGraph WeakEdgeJoin(const LabeledGraph& h1, Edge e1,
                          const LabeledGraph& h2, Edge e2);
// As WeakEdgeJoin but the shared edge gets multiplicity 2.
MultiGraph StrongEdgeJoin(const LabeledGraph& h1, Edge e1,
                          const LabeledGraph& h2, Edge e2);

// Number of copies of H in G: injective homomorphisms H -> G divided by
// |Aut(H)|. Backtracking over bitset adjacency with degree pruning.
// Throws if |V(H)| > |V(G)| or |V(H)| > kMaxCountPatternVertices.
std::uint64_t CountCopies(const LabeledGraph& h, const LabeledGraph& g);

}  // namespace graphonlab

#endif  // GRAPHONLAB_GRAPH_H_
