// Copyright 2026 The pconn Authors
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

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pconn {

using Vertex = int;

// Undirected edge, stored normalized with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool has(Vertex x) const { return x == u || x == v; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct Incidence {
  Vertex to;
  int edge;
};

// Simple undirected graph on vertices 0..n-1. Edge ids index the
// lexicographically sorted edge list; adjacency is stored in CSR form sorted
// by neighbor. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws Error(kInvalidGraph) on self-loops, parallel edges or ids out of range.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }

  std::span<const Incidence> incident(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<int> edge_id(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }

  std::vector<Vertex> neighbors(Vertex v) const;
  int min_degree() const;
  int max_degree() const;
  bool is_complete() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Incidence> adjacency_;
};

// Sides of a 2-coloring of (a subset of) the vertices with no edge inside a side.
struct Bipartition {
  std::vector<Vertex> side_u;
  std::vector<Vertex> side_v;
  // Per vertex of the host graph: 0 for side_u, 1 for side_v, -1 if uncovered.
  std::vector<int> side;
};

// Graph on the same vertex ids keeping only the listed edges.
Graph edge_subgraph(const Graph& g, std::span<const int> edge_ids);

// Graph on the same vertex ids plus the given extra edges.
Graph with_edges(const Graph& g, std::span<const Edge> extra);

// Relabeled induced subgraph; vertex i of `graph` is to_host[i].
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;
  std::vector<Vertex> from_host;  // -1 for vertices outside the subgraph
  std::vector<int> edge_to_host;  // edge id in `graph` -> edge id in host
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Relabeled subgraph keeping the listed host edges and their endpoints.
InducedSubgraph compact_edge_subgraph(const Graph& g, std::span<const int> edge_ids);

// Small fixed-size bitset used for visited sets in searches.
class VertexMask {
 public:
  explicit VertexMask(int n = 0) : words_((n + 63) / 64, 0) {}
  void resize(int n) { words_.assign((n + 63) / 64, 0); }
  bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace pconn
