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

#include "graph/graph.hpp"

#include <algorithm>
#include <string>

#include "common/error.hpp"

namespace pconn {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  require(n >= 0, ErrorKind::kInvalidGraph, "negative vertex count");
  for (Edge& e : edges_) {
    if (!(e.u >= 0 && e.u < n && e.v >= 0 && e.v < n)) {
      fail(ErrorKind::kInvalidGraph, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                     " has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) {
      fail(ErrorKind::kInvalidGraph, "self-loop at vertex " + std::to_string(e.u));
    }
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    fail(ErrorKind::kInvalidGraph,
         "parallel edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));
  }

  offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (int v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  adjacency_.resize(2 * edges_.size());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (int id = 0; id < size(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[fill[e.u]++] = {e.v, id};
    adjacency_[fill[e.v]++] = {e.u, id};
  }
  // Edges are sorted, so each row is already sorted by neighbor for the
  // smaller endpoint; sort anyway to cover the larger endpoint.
  for (int v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1],
              [](const Incidence& a, const Incidence& b) { return a.to < b.to; });
  }
}

std::optional<int> Graph::edge_id(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return std::nullopt;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto row = incident(a);
  auto it = std::lower_bound(row.begin(), row.end(), b,
                             [](const Incidence& inc, Vertex x) { return inc.to < x; });
  if (it == row.end() || it->to != b) return std::nullopt;
  return it->edge;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(degree(v));
  for (const Incidence& inc : incident(v)) out.push_back(inc.to);
  return out;
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::is_complete() const {
  return static_cast<long long>(size()) * 2 == static_cast<long long>(n_) * (n_ - 1);
}

Graph edge_subgraph(const Graph& g, std::span<const int> edge_ids) {
  std::vector<Edge> edges;
  edges.reserve(edge_ids.size());
  for (int id : edge_ids) edges.push_back(g.edge(id));
  return Graph(g.order(), std::move(edges));
}

Graph with_edges(const Graph& g, std::span<const Edge> extra) {
  std::vector<Edge> edges = g.edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph(g.order(), std::move(edges));
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph sub;
  sub.from_host.assign(g.order(), -1);
  sub.to_host.assign(vertices.begin(), vertices.end());
  std::sort(sub.to_host.begin(), sub.to_host.end());
  for (int i = 0; i < static_cast<int>(sub.to_host.size()); ++i) {
    sub.from_host[sub.to_host[i]] = i;
  }
  std::vector<Edge> edges;
  std::vector<std::pair<Edge, int>> tagged;
  for (int id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(id);
    int a = sub.from_host[e.u];
    int b = sub.from_host[e.v];
    if (a >= 0 && b >= 0) tagged.push_back({make_edge(a, b), id});
  }
  std::sort(tagged.begin(), tagged.end());
  for (const auto& [e, id] : tagged) {
    edges.push_back(e);
    sub.edge_to_host.push_back(id);
  }
  sub.graph = Graph(static_cast<int>(sub.to_host.size()), std::move(edges));
  return sub;
}

InducedSubgraph compact_edge_subgraph(const Graph& g, std::span<const int> edge_ids) {
  InducedSubgraph sub;
  sub.from_host.assign(g.order(), -1);
  for (int id : edge_ids) {
    sub.from_host[g.edge(id).u] = 0;
    sub.from_host[g.edge(id).v] = 0;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (sub.from_host[v] == 0) {
      sub.from_host[v] = static_cast<int>(sub.to_host.size());
      sub.to_host.push_back(v);
    } else {
      sub.from_host[v] = -1;
    }
  }
  std::vector<std::pair<Edge, int>> tagged;
  for (int id : edge_ids) {
    const Edge& e = g.edge(id);
    tagged.push_back({make_edge(sub.from_host[e.u], sub.from_host[e.v]), id});
  }
  std::sort(tagged.begin(), tagged.end());
  std::vector<Edge> edges;
  for (const auto& [e, id] : tagged) {
    edges.push_back(e);
    sub.edge_to_host.push_back(id);
  }
  sub.graph = Graph(static_cast<int>(sub.to_host.size()), std::move(edges));
  return sub;
}

}  // namespace pconn
