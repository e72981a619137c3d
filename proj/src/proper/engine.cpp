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

#include "proper/engine.hpp"

#include <string>

#include "common/error.hpp"
#include "proper/blossom.hpp"

namespace pconn {

namespace {

bool usable(const PathQuery& q, Vertex v) { return !q.allowed || (*q.allowed)[v]; }

void check_query(const Graph& g, const EdgeColoring& c, const PathQuery& q) {
  require(q.source >= 0 && q.source < g.order() && q.target >= 0 && q.target < g.order(),
          ErrorKind::kPrecondition, "query vertex out of range");
  require(q.source != q.target, ErrorKind::kPrecondition,
          "proper path query needs distinct endpoints");
  require(static_cast<int>(c.color.size()) == g.size(), ErrorKind::kInvalidColoring,
          "coloring does not match the graph");
}

// Depth-first search over simple proper paths, giving up after `budget`
// edge expansions.
std::optional<std::vector<Vertex>> bounded_search(const Graph& g, const EdgeColoring& c,
                                                  const PathQuery& q, long budget) {
  struct Frame {
    Vertex v;
    int in_color;
    int next;
  };
  std::vector<char> on_path(g.order(), 0);
  std::vector<Frame> stack{{q.source, 0, 0}};
  on_path[q.source] = 1;
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto row = g.incident(f.v);
    if (f.next == static_cast<int>(row.size())) {
      on_path[f.v] = 0;
      stack.pop_back();
      continue;
    }
    if (--budget < 0) return std::nullopt;
    const Incidence& inc = row[f.next++];
    int col = c[inc.edge];
    if (col == f.in_color || on_path[inc.to] || !usable(q, inc.to)) continue;
    if (stack.size() == 1 && !(q.start_mask & color_bit(col))) continue;
    if (inc.to == q.target) {
      if (!(q.end_mask & color_bit(col))) continue;
      std::vector<Vertex> path;
      for (const Frame& fr : stack) path.push_back(fr.v);
      path.push_back(q.target);
      return path;
    }
    on_path[inc.to] = 1;
    stack.push_back({inc.to, col, 0});
  }
  return std::nullopt;
}

}  // namespace

std::vector<ColorMask> proper_walk_arrivals(const Graph& g, const EdgeColoring& c,
                                            const PathQuery& q) {
  int n = g.order();
  int width = c.k + 1;
  std::vector<char> seen(static_cast<std::size_t>(n) * width, 0);
  std::vector<ColorMask> arrivals(n, 0);
  std::vector<std::pair<Vertex, int>> queue;
  auto visit = [&](Vertex v, int col) {
    char& s = seen[static_cast<std::size_t>(v) * width + col];
    if (s) return;
    s = 1;
    arrivals[v] |= color_bit(col);
    queue.emplace_back(v, col);
  };
  for (const Incidence& inc : g.incident(q.source)) {
    int col = c[inc.edge];
    if ((q.start_mask & color_bit(col)) && usable(q, inc.to)) visit(inc.to, col);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [v, col] = queue[i];
    for (const Incidence& inc : g.incident(v)) {
      int next = c[inc.edge];
      if (next != col && usable(q, inc.to)) visit(inc.to, next);
    }
  }
  return arrivals;
}

bool proper_walk_exists(const Graph& g, const EdgeColoring& c, const PathQuery& q) {
  check_query(g, c, q);
  if (!usable(q, q.source) || !usable(q, q.target)) return false;
  return (proper_walk_arrivals(g, c, q)[q.target] & q.end_mask) != 0;
}

bool proper_walk_exists(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v) {
  PathQuery q;
  q.source = u;
  q.target = v;
  return proper_walk_exists(g, c, q);
}

std::optional<ProperPathCertificate> proper_path_by_matching(const Graph& g,
                                                             const EdgeColoring& c,
                                                             const PathQuery& q) {
  check_query(g, c, q);
  if (!usable(q, q.source) || !usable(q, q.target)) return std::nullopt;
  int n = g.order();
  const Vertex s = q.source;
  const Vertex t = q.target;

  // An edge is usable when both ends are allowed and its color fits the
  // mask of any endpoint it touches.
  auto edge_ok = [&](int id) {
    const Edge& e = g.edge(id);
    if (!usable(q, e.u) || !usable(q, e.v)) return false;
    ColorMask bit = color_bit(c[id]);
    if (e.has(s) && !(q.start_mask & bit)) return false;
    if (e.has(t) && !(q.end_mask & bit)) return false;
    return true;
  };

  // Node layout: s and t get one node each; every other vertex with r >= 2
  // usable colors gets one node per color and r - 2 absorbers.
  std::vector<int> owner;
  std::vector<int> first_node(n, -1);
  std::vector<int> color_of_node;
  std::vector<std::vector<std::pair<int, int>>> color_nodes(n);  // (color, node)
  auto new_node = [&](Vertex v, int col) {
    owner.push_back(v);
    color_of_node.push_back(col);
    return static_cast<int>(owner.size()) - 1;
  };
  first_node[s] = new_node(s, 0);
  first_node[t] = new_node(t, 0);
  std::vector<std::pair<int, int>> gadget_edges;
  for (Vertex x = 0; x < n; ++x) {
    if (x == s || x == t || !usable(q, x)) continue;
    ColorMask present = 0;
    for (const Incidence& inc : g.incident(x))
      if (edge_ok(inc.edge)) present |= color_bit(c[inc.edge]);
    int r = __builtin_popcount(present);
    if (r < 2) continue;
    first_node[x] = static_cast<int>(owner.size());
    for (int col = 1; col <= c.k; ++col)
      if (present & color_bit(col)) color_nodes[x].emplace_back(col, new_node(x, col));
    for (std::size_t i = 0; i < color_nodes[x].size(); ++i)
      for (std::size_t j = i + 1; j < color_nodes[x].size(); ++j)
        gadget_edges.emplace_back(color_nodes[x][i].second, color_nodes[x][j].second);
    for (int a = 0; a < r - 2; ++a) {
      int absorber = new_node(x, -1);
      for (auto [col, node] : color_nodes[x]) gadget_edges.emplace_back(absorber, node);
    }
  }
  auto node_for = [&](Vertex v, int col) {
    if (v == s || v == t) return first_node[v];
    for (auto [cc, node] : color_nodes[v])
      if (cc == col) return node;
    return -1;
  };

  GeneralMatching matching(static_cast<int>(owner.size()));
  for (int id = 0; id < g.size(); ++id) {
    if (!edge_ok(id)) continue;
    const Edge& e = g.edge(id);
    if (first_node[e.u] < 0 || first_node[e.v] < 0) continue;
    int a = node_for(e.u, c[id]);
    int b = node_for(e.v, c[id]);
    if (a >= 0 && b >= 0) matching.add_edge(a, b);
  }
  for (auto [a, b] : gadget_edges) matching.add_edge(a, b);
  std::vector<int> mate = matching.solve(true);
  if (mate.empty()) return std::nullopt;

  // External matched edges form an s-t path plus cycles; follow the path.
  std::vector<Vertex> path{s};
  int node = mate[first_node[s]];
  while (true) {
    Vertex v = owner[node];
    path.push_back(v);
    if (v == t) break;
    int exit = -1;
    for (auto [col, other] : color_nodes[v]) {
      if (other != node && owner[mate[other]] != v) exit = other;
    }
    require(exit >= 0 && static_cast<int>(path.size()) <= n, ErrorKind::kInternal,
            "matching does not encode a path");
    node = mate[exit];
  }
  return make_certificate(g, c, std::move(path));
}

std::optional<ProperPathCertificate> find_proper_path(const Graph& g, const EdgeColoring& c,
                                                      const PathQuery& q) {
  if (!proper_walk_exists(g, c, q)) return std::nullopt;
  long budget = 16L + 4L * g.size();
  if (auto path = bounded_search(g, c, q, budget)) return make_certificate(g, c, std::move(*path));
  return proper_path_by_matching(g, c, q);
}

std::optional<ProperPathCertificate> proper_path_exists(const Graph& g, const EdgeColoring& c,
                                                        Vertex u, Vertex v) {
  PathQuery q;
  q.source = u;
  q.target = v;
  return find_proper_path(g, c, q);
}

}  // namespace pconn
