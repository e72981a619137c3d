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

#include "graph/bipartite.hpp"

#include <algorithm>

#include "common/error.hpp"
#include "graph/algorithms.hpp"

namespace pconn {

namespace {

constexpr int kExhaustiveCutLimit = 16;

int cut_size(const Graph& g, const std::vector<int>& side) {
  int total = 0;
  for (const Edge& e : g.edges()) total += side[e.u] != side[e.v];
  return total;
}

// Gray-code walk over all bipartitions with vertex 0 fixed to side 0.
std::vector<int> exhaustive_max_cut(const Graph& g) {
  int n = g.order();
  std::vector<int> side(n, 0);
  std::vector<int> best = side;
  int value = 0;
  int best_value = 0;
  for (std::uint32_t step = 1; step < (std::uint32_t{1} << (n - 1)); ++step) {
    int bit = __builtin_ctz(step);
    Vertex x = bit + 1;
    for (const Incidence& inc : g.incident(x)) value += side[x] == side[inc.to] ? 1 : -1;
    side[x] ^= 1;
    if (value > best_value) {
      best_value = value;
      best = side;
    }
  }
  return best;
}

void local_search(const Graph& g, std::vector<int>& side) {
  bool improved = true;
  while (improved) {
    improved = false;
    for (Vertex x = 0; x < g.order(); ++x) {
      int same = 0;
      for (const Incidence& inc : g.incident(x)) same += side[x] == side[inc.to];
      if (2 * same > g.degree(x)) {
        side[x] ^= 1;
        improved = true;
      }
    }
  }
}

Graph cross_graph(const Graph& g, const std::vector<int>& side) {
  std::vector<int> ids;
  for (int id = 0; id < g.size(); ++id)
    if (side[g.edge(id).u] != side[g.edge(id).v]) ids.push_back(id);
  return edge_subgraph(g, ids);
}

// Flips the vertex set behind an edge cut of size < 2 in the cross graph if
// that strictly enlarges the cut. Returns false when no such flip exists.
bool repair_step(const Graph& g, std::vector<int>& side) {
  Graph h = cross_graph(g, side);
  int count = 0;
  std::vector<int> label = component_labels(h, &count);
  std::vector<std::vector<Vertex>> candidates;
  if (count > 1) {
    for (int c = 0; c < count; ++c) {
      std::vector<Vertex> part;
      for (Vertex v = 0; v < g.order(); ++v)
        if (label[v] == c) part.push_back(v);
      candidates.push_back(std::move(part));
    }
  } else {
    for (int bridge : bridges_and_cut_vertices(h).bridges) {
      std::vector<int> rest;
      for (int id = 0; id < h.size(); ++id)
        if (id != bridge) rest.push_back(id);
      Graph cut = edge_subgraph(h, rest);
      std::vector<int> parts = component_labels(cut);
      std::vector<Vertex> part;
      Vertex anchor = h.edge(bridge).u;
      for (Vertex v = 0; v < g.order(); ++v)
        if (parts[v] == parts[anchor]) part.push_back(v);
      candidates.push_back(std::move(part));
    }
  }
  int before = cut_size(g, side);
  for (const auto& part : candidates) {
    std::vector<int> trial = side;
    for (Vertex v : part) trial[v] ^= 1;
    if (cut_size(g, trial) > before) {
      side = std::move(trial);
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<int> max_cut_sides(const Graph& g) {
  int n = g.order();
  if (auto b = bipartition(g)) return b->side;
  std::vector<int> side(n, 0);
  if (n <= kExhaustiveCutLimit) return exhaustive_max_cut(g);
  for (Vertex v = 0; v < n; ++v) side[v] = v & 1;
  local_search(g, side);
  while (!is_two_edge_connected(cross_graph(g, side)) && repair_step(g, side)) {
    local_search(g, side);
  }
  return side;
}

Graph max_cut_bipartite_subgraph(const Graph& g) {
  if (bipartition(g)) return g;
  return cross_graph(g, max_cut_sides(g));
}

std::vector<Vertex> shortest_even_cycle(const Graph& g) {
  int n = g.order();
  std::vector<Vertex> best_set;
  std::vector<Vertex> best_cycle;
  std::vector<Vertex> path;
  std::vector<char> on_path(n, 0);
  for (int length = 4; length <= n - (n & 1); length += 2) {
    for (Vertex s = 0; s < n; ++s) {
      // Cycles whose smallest vertex is s, traversed from s.
      path.assign(1, s);
      on_path[s] = 1;
      auto dfs = [&](auto&& self) -> void {
        Vertex x = path.back();
        int depth = static_cast<int>(path.size());
        for (const Incidence& inc : g.incident(x)) {
          Vertex y = inc.to;
          if (y < s) continue;
          if (y == s) {
            if (depth == length && path[1] < x) {
              std::vector<Vertex> set = path;
              std::sort(set.begin(), set.end());
              if (best_set.empty() || set < best_set) {
                best_set = set;
                best_cycle = path;
              }
            }
            continue;
          }
          if (on_path[y] || depth == length) continue;
          on_path[y] = 1;
          path.push_back(y);
          self(self);
          path.pop_back();
          on_path[y] = 0;
        }
      };
      dfs(dfs);
      on_path[s] = 0;
    }
    if (!best_cycle.empty()) return best_cycle;
  }
  return {};
}

std::vector<Vertex> find_consistent_ear(const Graph& g, const BipartiteSubgraph& h) {
  int n = g.order();
  std::vector<char> used(n, 0);
  std::vector<Vertex> path;
  std::vector<Vertex> found;
  for (Vertex x : h.vertices) {
    path.assign(1, x);
    auto dfs = [&](auto&& self) -> bool {
      Vertex tip = path.back();
      for (const Incidence& inc : g.incident(tip)) {
        Vertex y = inc.to;
        if (h.side[y] >= 0) {
          int length = static_cast<int>(path.size());  // edges once y is appended
          if (length < 2) continue;
          if (y == x && length < 3) continue;
          bool ok = y == x ? length % 2 == 0 : (h.side[x] ^ (length & 1)) == h.side[y];
          if (!ok) continue;
          path.push_back(y);
          found = path;
          return true;
        }
        if (used[y]) continue;
        used[y] = 1;
        path.push_back(y);
        if (self(self)) return true;
        path.pop_back();
        used[y] = 0;
      }
      return false;
    };
    if (dfs(dfs)) return found;
  }
  return {};
}

BipartiteSubgraph maximal_2ec_bipartite_subgraph(const Graph& g) {
  std::vector<Vertex> seed = shortest_even_cycle(g);
  require(!seed.empty(), ErrorKind::kPrecondition, "no seed cycle: graph has no even cycle");
  int n = g.order();
  BipartiteSubgraph h;
  h.side.assign(n, -1);
  std::vector<char> has_edge(g.size(), 0);
  auto add_path = [&](const std::vector<Vertex>& p, int start_side) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (h.side[p[i]] < 0) h.side[p[i]] = start_side ^ static_cast<int>(i & 1);
      if (i + 1 < p.size()) has_edge[*g.edge_id(p[i], p[i + 1])] = 1;
    }
  };
  std::vector<Vertex> closed = seed;
  closed.push_back(seed.front());
  add_path(closed, 0);
  for (;;) {
    for (int id = 0; id < g.size(); ++id) {
      const Edge& e = g.edge(id);
      if (h.side[e.u] >= 0 && h.side[e.v] >= 0 && h.side[e.u] != h.side[e.v]) has_edge[id] = 1;
    }
    h.vertices.clear();
    for (Vertex v = 0; v < n; ++v)
      if (h.side[v] >= 0) h.vertices.push_back(v);
    std::vector<Vertex> ear = find_consistent_ear(g, h);
    if (ear.empty()) break;
    add_path(ear, h.side[ear.front()]);
  }
  h.edge_ids.clear();
  for (int id = 0; id < g.size(); ++id)
    if (has_edge[id]) h.edge_ids.push_back(id);
  return h;
}

}  // namespace pconn
