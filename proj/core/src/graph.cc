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

#include "graphonlab/graph.h"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace graphonlab {
namespace {

Edge Normalize(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

void CheckEndpoints(int vertex_count, int a, int b) {
  if (a == b) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
  }
  if (a < 1 || b < 1 || a > vertex_count || b > vertex_count) {
    throw std::invalid_argument("edge (" + std::to_string(a) + "," +
                                std::to_string(b) + ") out of range 1.." +
                                std::to_string(vertex_count));
  }
}

void CheckVertex(const LabeledGraph& g, int a, const char* what) {
  if (a < 1 || a > g.vertex_count()) {
    throw std::invalid_argument(std::string(what) + ": vertex " +
                                std::to_string(a) + " not in 1.." +
                                std::to_string(g.vertex_count()));
  }
}

// Relabeling of H2 for a join in which the vertices listed in `glued` (H2
// labels) are mapped onto `targets` (H1 labels) and the remaining H2 vertices
// are appended after H1's.
std::vector<int> JoinRelabeling(int h1_vertices, int h2_vertices,
                                std::span<const int> glued,
                                std::span<const int> targets) {
  std::vector<int> label(h2_vertices + 1, 0);
  for (std::size_t i = 0; i < glued.size(); ++i) label[glued[i]] = targets[i];
  int next = h1_vertices + 1;
  for (int v = 1; v <= h2_vertices; ++v) {
    if (label[v] == 0) label[v] = next++;
  }
  return label;
}

void CheckJoinEdge(const LabeledGraph& g, Edge e, const char* what) {
  CheckVertex(g, e.first, what);
  CheckVertex(g, e.second, what);
  if (!g.HasEdge(e.first, e.second)) {
    throw std::invalid_argument(std::string(what) + ": (" +
                                std::to_string(e.first) + "," +
                                std::to_string(e.second) + ") is not an edge");
  }
}

// Bitset adjacency of a host graph, 0-based.
class BitAdjacency {
 public:
  explicit BitAdjacency(const LabeledGraph& g)
      : n_(g.vertex_count()),
        words_((n_ + 63) / 64),
        rows_(static_cast<std::size_t>(n_) * words_, 0),
        degree_(n_, 0) {
    for (const auto& [a, b] : g.edges()) {
      Set(a - 1, b - 1);
      Set(b - 1, a - 1);
      ++degree_[a - 1];
      ++degree_[b - 1];
    }
  }

  int n() const { return n_; }
  int words() const { return words_; }
  const std::uint64_t* Row(int v) const {
    return rows_.data() + static_cast<std::size_t>(v) * words_;
  }
  int Degree(int v) const { return degree_[v]; }

 private:
  void Set(int row, int col) {
    rows_[static_cast<std::size_t>(row) * words_ + col / 64] |=
        std::uint64_t{1} << (col % 64);
  }

  int n_;
  int words_;
  std::vector<std::uint64_t> rows_;
  std::vector<int> degree_;
};

class InjectiveHomCounter {
 public:
  InjectiveHomCounter(const LabeledGraph& pattern, const BitAdjacency& host)
      : host_(host), v_(pattern.vertex_count()) {
    const std::vector<int> degree = pattern.Degrees();
    std::vector<std::vector<bool>> adjacent(v_, std::vector<bool>(v_, false));
    for (const auto& [a, b] : pattern.edges()) {
      adjacent[a - 1][b - 1] = adjacent[b - 1][a - 1] = true;
    }
    // Greedy order: most already-placed neighbors first, then highest degree.
    std::vector<bool> placed(v_, false);
    for (int step = 0; step < v_; ++step) {
      int best = -1, best_links = -1;
      for (int u = 0; u < v_; ++u) {
        if (placed[u]) continue;
        int links = 0;
        for (int w : order_) links += adjacent[u][w] ? 1 : 0;
        if (links > best_links ||
            (links == best_links && degree[u] > degree[best])) {
          best = u;
          best_links = links;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
    earlier_neighbors_.resize(v_);
    pattern_degree_.resize(v_);
    for (int level = 0; level < v_; ++level) {
      const int u = order_[level];
      pattern_degree_[level] = degree[u];
      for (int prev = 0; prev < level; ++prev) {
        if (adjacent[u][order_[prev]]) earlier_neighbors_[level].push_back(prev);
      }
    }
    image_.assign(v_, -1);
    used_.assign(host_.words(), 0);
    scratch_.assign(static_cast<std::size_t>(v_) * host_.words(), 0);
  }

  std::uint64_t Count() { return Extend(0); }

 private:
  std::uint64_t Extend(int level) {
    const int words = host_.words();
    std::uint64_t* candidates =
        scratch_.data() + static_cast<std::size_t>(level) * words;
    const auto& anchors = earlier_neighbors_[level];
    if (anchors.empty()) {
      for (int w = 0; w < words; ++w) candidates[w] = ~std::uint64_t{0};
      if (host_.n() % 64 != 0) {
        candidates[words - 1] = (std::uint64_t{1} << (host_.n() % 64)) - 1;
      }
    } else {
      const std::uint64_t* first = host_.Row(image_[anchors[0]]);
      std::copy(first, first + words, candidates);
      for (std::size_t i = 1; i < anchors.size(); ++i) {
        const std::uint64_t* row = host_.Row(image_[anchors[i]]);
        for (int w = 0; w < words; ++w) candidates[w] &= row[w];
      }
    }
    for (int w = 0; w < words; ++w) candidates[w] &= ~used_[w];

    if (level == v_ - 1) {
      // Every candidate is adjacent to the images of all pattern neighbors,
      // so the degree condition holds automatically.
      std::uint64_t total = 0;
      for (int w = 0; w < words; ++w) total += std::popcount(candidates[w]);
      return total;
    }

    std::uint64_t total = 0;
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = candidates[w];
      while (bits != 0) {
        const int x = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if (host_.Degree(x) < pattern_degree_[level]) continue;
        image_[level] = x;
        used_[w] |= std::uint64_t{1} << (x % 64);
        total += Extend(level + 1);
        used_[w] &= ~(std::uint64_t{1} << (x % 64));
      }
    }
    return total;
  }

  const BitAdjacency& host_;
  int v_;
  std::vector<int> order_;
  // Per level, the earlier levels holding neighbors of this pattern vertex.
  std::vector<std::vector<int>> earlier_neighbors_;
  std::vector<int> pattern_degree_;
  std::vector<int> image_;
  std::vector<std::uint64_t> used_;
  std::vector<std::uint64_t> scratch_;
};

}  // namespace

LabeledGraph::LabeledGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1) {
    throw std::invalid_argument("graph needs at least one vertex");
  }
  for (auto& e : edges_) {
    CheckEndpoints(vertex_count_, e.first, e.second);
    e = Normalize(e.first, e.second);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge in simple graph");
  }
}

bool LabeledGraph::HasEdge(int a, int b) const {
  if (a == b) return false;
  return std::binary_search(edges_.begin(), edges_.end(), Normalize(a, b));
}

std::vector<int> LabeledGraph::Degrees() const {
  std::vector<int> degree(vertex_count_, 0);
  for (const auto& [a, b] : edges_) {
    ++degree[a - 1];
    ++degree[b - 1];
  }
  return degree;
}

MultiGraph::MultiGraph(int vertex_count, std::vector<WeightedEdge> edges)
    : vertex_count_(vertex_count) {
  if (vertex_count_ < 1) {
    throw std::invalid_argument("graph needs at least one vertex");
  }
  std::map<Edge, int> merged;
  for (const auto& [e, m] : edges) {
    CheckEndpoints(vertex_count_, e.first, e.second);
    if (m < 1) throw std::invalid_argument("edge multiplicity must be >= 1");
    merged[Normalize(e.first, e.second)] += m;
  }
  edges_.reserve(merged.size());
  for (const auto& [e, m] : merged) edges_.push_back({e, m});
}

MultiGraph::MultiGraph(const LabeledGraph& graph)
    : vertex_count_(graph.vertex_count()) {
  edges_.reserve(graph.edges().size());
  for (const Edge& e : graph.edges()) edges_.push_back({e, 1});
}

int MultiGraph::Multiplicity(int a, int b) const {
  const Edge key = Normalize(a, b);
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), key,
      [](const WeightedEdge& we, const Edge& k) { return we.edge < k; });
  return (it != edges_.end() && it->edge == key) ? it->multiplicity : 0;
}

int MultiGraph::TotalMultiplicity() const {
  int total = 0;
  for (const auto& we : edges_) total += we.multiplicity;
  return total;
}

LabeledGraph MultiGraph::Simplified() const {
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& we : edges_) edges.push_back(we.edge);
  return LabeledGraph(vertex_count_, std::move(edges));
}

namespace patterns {

LabeledGraph Complete(int r) {
  std::vector<Edge> edges;
  for (int a = 1; a <= r; ++a) {
    for (int b = a + 1; b <= r; ++b) edges.emplace_back(a, b);
  }
  return LabeledGraph(r, std::move(edges));
}

LabeledGraph Star(int leaves) {
  std::vector<Edge> edges;
  for (int leaf = 2; leaf <= leaves + 1; ++leaf) edges.emplace_back(1, leaf);
  return LabeledGraph(leaves + 1, std::move(edges));
}

LabeledGraph Path(int edges) {
  std::vector<Edge> list;
  for (int a = 1; a <= edges; ++a) list.emplace_back(a, a + 1);
  return LabeledGraph(edges + 1, std::move(list));
}

LabeledGraph Empty(int n) { return LabeledGraph(n, {}); }

}  // namespace patterns

std::int64_t AutomorphismCount(const LabeledGraph& h, int max_vertices) {
  const int v = h.vertex_count();
  if (v > max_vertices) {
    throw std::invalid_argument("automorphism count: " + std::to_string(v) +
                                " vertices exceeds brute-force bound " +
                                std::to_string(max_vertices));
  }
  std::vector<char> adjacent(static_cast<std::size_t>(v) * v, 0);
  for (const auto& [a, b] : h.edges()) {
    adjacent[(a - 1) * v + (b - 1)] = adjacent[(b - 1) * v + (a - 1)] = 1;
  }
  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t count = 0;
  do {
    // Edge counts match, so mapping every edge onto an edge is enough.
    bool preserves = true;
    for (const auto& [a, b] : h.edges()) {
      if (!adjacent[perm[a - 1] * v + perm[b - 1]]) {
        preserves = false;
        break;
      }
    }
    if (preserves) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::vector<std::vector<Edge>> CopySet(const LabeledGraph& h,
                                       std::span<const int> vertex_set) {
  const int v = h.vertex_count();
  if (static_cast<int>(vertex_set.size()) != v) {
    throw std::invalid_argument("copy set: |S| = " +
                                std::to_string(vertex_set.size()) +
                                " but |V(H)| = " + std::to_string(v));
  }
  if (v > kMaxAutomorphismVertices) {
    throw std::invalid_argument("copy set: pattern too large");
  }
  std::vector<int> labels(vertex_set.begin(), vertex_set.end());
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw std::invalid_argument("copy set: labels in S must be distinct");
  }
  std::set<std::vector<Edge>> copies;
  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Edge> edges;
    edges.reserve(h.edges().size());
    for (const auto& [a, b] : h.edges()) {
      edges.push_back(Normalize(labels[perm[a - 1]], labels[perm[b - 1]]));
    }
    std::sort(edges.begin(), edges.end());
    copies.insert(std::move(edges));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {copies.begin(), copies.end()};
}

std::vector<LabeledGraph> CanonicalCopies(const LabeledGraph& h) {
  std::vector<int> labels(h.vertex_count());
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<LabeledGraph> graphs;
  for (auto& edges : CopySet(h, labels)) {
    graphs.emplace_back(h.vertex_count(), std::move(edges));
  }
  return graphs;
}

LabeledGraph VertexJoin(const LabeledGraph& h1, int a, const LabeledGraph& h2,
                        int b) {
  CheckVertex(h1, a, "vertex join");
  CheckVertex(h2, b, "vertex join");
  const int glued[] = {b};
  const int targets[] = {a};
  const std::vector<int> label =
      JoinRelabeling(h1.vertex_count(), h2.vertex_count(), glued, targets);
  std::vector<Edge> edges = h1.edges();
  for (const auto& [x, y] : h2.edges()) edges.emplace_back(label[x], label[y]);
  return LabeledGraph(h1.vertex_count() + h2.vertex_count() - 1,
                      std::move(edges));
}

MultiGraph StrongEdgeJoin(const LabeledGraph& h1, Edge e1,
                          const LabeledGraph& h2, Edge e2) {
  CheckJoinEdge(h1, e1, "edge join");
  CheckJoinEdge(h2, e2, "edge join");
  const int glued[] = {e2.first, e2.second};
  const int targets[] = {e1.first, e1.second};
  const std::vector<int> label =
      JoinRelabeling(h1.vertex_count(), h2.vertex_count(), glued, targets);
  std::vector<MultiGraph::WeightedEdge> edges;
  for (const Edge& e : h1.edges()) edges.push_back({e, 1});
  // The image of e2 coincides with e1 and merges into multiplicity 2; no
  // other H2 edge lands on an H1 edge since only e2 joins two glued vertices.
  for (const auto& [x, y] : h2.edges()) {
    edges.push_back({Edge{label[x], label[y]}, 1});
  }
  return MultiGraph(h1.vertex_count() + h2.vertex_count() - 2,
                    std::move(edges));
}

LabeledGraph WeakEdgeJoin(const LabeledGraph& h1, Edge e1,
                          const LabeledGraph& h2, Edge e2) {
  return StrongEdgeJoin(h1, e1, h2, e2).Simplified();
}

std::uint64_t CountCopies(const LabeledGraph& h, const LabeledGraph& g) {
  if (h.vertex_count() > kMaxCountPatternVertices) {
    throw std::invalid_argument("count copies: pattern has more than " +
                                std::to_string(kMaxCountPatternVertices) +
                                " vertices");
  }
  if (h.vertex_count() > g.vertex_count()) {
    throw std::invalid_argument("count copies: pattern larger than host");
  }
  const BitAdjacency host(g);
  InjectiveHomCounter counter(h, host);
  return counter.Count() / static_cast<std::uint64_t>(AutomorphismCount(h));
}

}  // namespace graphonlab
