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

#include "construct/lemmas.hpp"

#include <algorithm>
#include <string>

#include "common/error.hpp"
#include "graph/algorithms.hpp"
#include "graph/bipartite.hpp"
#include "proper/checks.hpp"
#include "solver/search.hpp"

namespace pconn {

namespace {

constexpr int kSmallSearchEdges = 20;
constexpr std::int64_t kSmallSearchBudget = std::int64_t{1} << 16;

std::string edge_name(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

void check_bridgeless_bipartite(const Graph& h) {
  require(h.order() >= 2 && is_connected(h), ErrorKind::kPrecondition,
          "graph must be connected with at least two vertices");
  std::vector<Vertex> odd = find_odd_cycle(h);
  if (!odd.empty()) {
    std::string text;
    for (Vertex v : odd) text += (text.empty() ? "" : " ") + std::to_string(v);
    fail(ErrorKind::kPrecondition, "graph is not bipartite: odd cycle " + text);
  }
  std::vector<int> bridges = bridges_and_cut_vertices(h).bridges;
  if (!bridges.empty()) {
    fail(ErrorKind::kPrecondition, "graph has a bridge: edge " + edge_name(h.edge(bridges[0])));
  }
}

EdgeColoring alternate_chains(const Graph& h) {
  EdgeColoring c(2, h.size());
  for (const auto& chain : chain_decomposition(h)) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      c[*h.edge_id(chain[i], chain[i + 1])] = i % 2 == 0 ? 1 : 2;
  }
  return c;
}

// Colorings of a path with `length` edges to try when adding an ear, in
// order of preference.
std::vector<std::vector<int>> ear_candidates(int length) {
  std::vector<std::vector<int>> out;
  auto alternate = [&](int a, int b) {
    std::vector<int> x(length);
    for (int i = 0; i < length; ++i) x[i] = i % 2 == 0 ? a : b;
    return x;
  };
  out.push_back(alternate(1, 2));
  out.push_back(alternate(2, 1));
  if (length <= 6) {
    // Every proper 3-coloring, then every 3-coloring.
    for (int pass = 0; pass < 2; ++pass) {
      std::vector<int> x(length, 1);
      for (;;) {
        bool proper = true;
        for (int i = 1; i < length; ++i) proper &= x[i] != x[i - 1];
        if (proper == (pass == 0)) out.push_back(x);
        int i = 0;
        while (i < length && x[i] == 3) x[i++] = 1;
        if (i == length) break;
        ++x[i];
      }
    }
  } else {
    for (int base = 0; base < 2; ++base) {
      for (int i = 0; i < length; ++i) {
        std::vector<int> x = base == 0 ? alternate(1, 2) : alternate(2, 1);
        x[i] = 3;
        out.push_back(x);
      }
    }
    const int perms[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    for (const auto& p : perms) {
      std::vector<int> x(length);
      for (int i = 0; i < length; ++i) x[i] = p[i % 3];
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<Vertex>> chain_decomposition(const Graph& g) {
  int n = g.order();
  std::vector<std::vector<Vertex>> chains;
  if (n == 0) return chains;
  std::vector<int> order(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<int> parent_edge(n, -1);
  std::vector<Vertex> preorder;
  std::vector<std::pair<Vertex, int>> stack{{0, 0}};
  order[0] = 0;
  preorder.push_back(0);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    auto row = g.incident(v);
    if (next == static_cast<int>(row.size())) {
      stack.pop_back();
      continue;
    }
    const Incidence& inc = row[next++];
    if (order[inc.to] >= 0) continue;
    order[inc.to] = static_cast<int>(preorder.size());
    preorder.push_back(inc.to);
    parent[inc.to] = v;
    parent_edge[inc.to] = inc.edge;
    stack.push_back({inc.to, 0});
  }
  // Non-tree edges, listed at their ancestor endpoint.
  std::vector<std::vector<Vertex>> back(n);
  for (Vertex v : preorder) {
    for (const Incidence& inc : g.incident(v)) {
      if (inc.edge == parent_edge[v] || inc.edge == parent_edge[inc.to]) continue;
      if (order[inc.to] > order[v]) back[v].push_back(inc.to);
    }
  }
  std::vector<char> visited(n, 0);
  for (Vertex v : preorder) {
    visited[v] = 1;
    for (Vertex x : back[v]) {
      std::vector<Vertex> chain{v, x};
      Vertex cur = x;
      while (!visited[cur]) {
        visited[cur] = 1;
        cur = parent[cur];
        chain.push_back(cur);
      }
      chains.push_back(std::move(chain));
    }
  }
  return chains;
}

EdgeColoring lift_spanning_coloring(const Graph& g, const Graph& h, const EdgeColoring& c_h,
                                    bool verify) {
  require(h.order() == g.order(), ErrorKind::kPrecondition,
          "subgraph is not spanning: vertex counts differ");
  require(is_connected(h), ErrorKind::kPrecondition, "subgraph is not connected");
  require(static_cast<int>(c_h.color.size()) == h.size(), ErrorKind::kInvalidColoring,
          "coloring does not match the subgraph");
  EdgeColoring c(std::max(1, c_h.k), g.size(), 1);
  for (int id = 0; id < h.size(); ++id) {
    const Edge& e = h.edge(id);
    auto host = g.edge_id(e.u, e.v);
    if (!host.has_value()) {
      fail(ErrorKind::kPrecondition, "edge " + edge_name(e) +
                                     " of the subgraph is not in the graph");
    }
    c[*host] = c_h[id];
  }
  if (verify) {
    ConnectivityVerdict v = is_proper_connected(g, c);
    if (!v.ok) {
      fail(ErrorKind::kInternal, "lifted coloring fails at pair " +
                                     std::to_string(v.failing_pair->first) + "," +
                                     std::to_string(v.failing_pair->second));
    }
  }
  return c;
}

EdgeColoring strong_2_coloring_bipartite(const Graph& h) {
  check_bridgeless_bipartite(h);
  EdgeColoring c = alternate_chains(h);
  if (has_strong_property(h, c, false).ok) return c;
  SearchOptions opt;
  opt.require_strong = true;
  SearchOutcome o = exists_pc_coloring(h, 2, opt);
  require(o.status == SearchStatus::kFound, ErrorKind::kInternal,
          "no strong 2-coloring found for a bridgeless bipartite graph");
  return *o.coloring;
}

std::optional<EdgeColoring> extend_vertex_addition(const Graph& g, const EdgeColoring& c,
                                                   Vertex v) {
  require(v >= 0 && v < g.order(), ErrorKind::kPrecondition, "vertex out of range");
  if (g.degree(v) < 2) {
    fail(ErrorKind::kPrecondition, "new vertex needs at least two edges, has " +
                                   std::to_string(g.degree(v)));
  }
  require(static_cast<int>(c.color.size()) == g.size(), ErrorKind::kInvalidColoring,
          "coloring does not match the graph");
  std::vector<int> attach;
  for (const Incidence& inc : g.incident(v)) attach.push_back(inc.edge);
  std::vector<char> focus(g.order(), 0);
  focus[v] = 1;
  EdgeColoring trial = c;
  trial.k = std::max(2, c.k);
  int d = static_cast<int>(attach.size());
  auto try_mask = [&](std::uint64_t bits) {
    for (int i = 0; i < d; ++i) trial[attach[i]] = ((bits >> i) & 1) ? 2 : 1;
    return proper_on_pairs_touching(g, trial, focus);
  };
  // The four combinations on the first two attach edges, the rest color 1.
  for (std::uint64_t bits = 0; bits < 4; ++bits)
    if (try_mask(bits)) return trial;
  if (d > 2 && d < 20) {
    for (std::uint64_t bits = 4; bits < (std::uint64_t{1} << d); ++bits)
      if (try_mask(bits)) return trial;
  }
  return std::nullopt;
}

EdgeColoring color_2connected_3(const Graph& g) {
  require(is_two_connected(g), ErrorKind::kPrecondition, "graph is not 2-connected");
  if (g.size() <= kSmallSearchEdges) {
    SearchOptions opt;
    opt.require_strong = true;
    opt.budget_nodes = kSmallSearchBudget;
    SearchOutcome o = exists_pc_coloring(g, 2, opt);
    if (o.status == SearchStatus::kFound) return *o.coloring;
  }

  EdgeColoring c(3, g.size());
  std::vector<int> current;  // host edge ids colored so far
  std::vector<char> present(g.order(), 0);
  for (const auto& chain : chain_decomposition(g)) {
    std::vector<int> ids;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      ids.push_back(*g.edge_id(chain[i], chain[i + 1]));
    bool chord = chain.size() == 2 && present[chain[0]] && present[chain[1]];
    if (chord) {
      // Extra edges never remove proper paths.
      c[ids[0]] = 1;
      current.push_back(ids[0]);
      continue;
    }
    std::vector<int> next = current;
    next.insert(next.end(), ids.begin(), ids.end());
    std::sort(next.begin(), next.end());
    InducedSubgraph sub = compact_edge_subgraph(g, next);
    std::vector<char> focus(sub.graph.order(), 0);
    for (Vertex v : chain)
      if (!present[v]) focus[sub.from_host[v]] = 1;
    bool placed = false;
    for (const auto& cand : ear_candidates(static_cast<int>(ids.size()))) {
      for (std::size_t i = 0; i < ids.size(); ++i) c[ids[i]] = cand[i];
      EdgeColoring local(3, sub.graph.size());
      for (int e = 0; e < sub.graph.size(); ++e) local[e] = c[sub.edge_to_host[e]];
      if (strong_on_pairs_touching(sub.graph, local, focus)) {
        placed = true;
        break;
      }
    }
    require(placed, ErrorKind::kInternal, "no strong 3-coloring extends to the next ear");
    current = std::move(next);
    for (Vertex v : chain) present[v] = 1;
  }
  StrongVerdict verdict = has_strong_property(g, c, false);
  require(verdict.ok, ErrorKind::kInternal, "ear coloring fails the strong property");
  c.k = *std::max_element(c.color.begin(), c.color.end());
  return c;
}

EdgeColoring color_3ec(const Graph& g) {
  require(g.order() >= 2, ErrorKind::kPrecondition, "graph needs at least two vertices");
  require(!g.is_complete(), ErrorKind::kPrecondition,
          "graph is complete: pc = 1, outside the 3-edge-connected construction");
  if (!edge_connectivity_at_least(g, 3)) {
    fail(ErrorKind::kPrecondition, "edge connectivity is " + std::to_string(edge_connectivity(g)) +
                                   ", need at least 3");
  }
  Graph h = max_cut_bipartite_subgraph(g);
  require(bipartition(h).has_value() && is_two_edge_connected(h), ErrorKind::kInternal,
          "max-cut subgraph is not 2-edge-connected bipartite");
  EdgeColoring c_h = alternate_chains(h);
  EdgeColoring c = lift_spanning_coloring(g, h, c_h, false);
  if (!has_strong_property(g, c, false).ok) {
    c = lift_spanning_coloring(g, h, strong_2_coloring_bipartite(h), false);
    StrongVerdict v = has_strong_property(g, c, false);
    if (!v.ok) {
      fail(ErrorKind::kInternal,
           "3-edge-connected construction fails the strong property at pair " +
               std::to_string(v.failing_pair->first) + "," +
               std::to_string(v.failing_pair->second));
    }
  }
  return c;
}

}  // namespace pconn
