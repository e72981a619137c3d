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

#include "graph/algorithms.hpp"

#include <algorithm>
#include <string>

#include "common/error.hpp"
#include "graph/flow.hpp"

namespace pconn {

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Vertex x = queue[i];
    for (const Incidence& inc : g.incident(x)) {
      if (dist[inc.to] < 0) {
        dist[inc.to] = dist[x] + 1;
        queue.push_back(inc.to);
      }
    }
  }
  return dist;
}

std::vector<int> component_labels(const Graph& g, int* count) {
  std::vector<int> label(g.order(), -1);
  std::vector<Vertex> stack;
  int next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.incident(x)) {
        if (label[inc.to] < 0) {
          label[inc.to] = next;
          stack.push_back(inc.to);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  int count = 0;
  component_labels(g, &count);
  return count == 1;
}

namespace {

// Number of internally vertex-disjoint s-t paths (s, t nonadjacent), capped at limit.
int vertex_disjoint_paths(const Graph& g, Vertex s, Vertex t, int limit) {
  int n = g.order();
  FlowNetwork net(2 * n);
  for (Vertex x = 0; x < n; ++x) {
    net.add_arc(2 * x, 2 * x + 1, (x == s || x == t) ? n : 1);
  }
  for (const Edge& e : g.edges()) {
    net.add_arc(2 * e.u + 1, 2 * e.v, 1);
    net.add_arc(2 * e.v + 1, 2 * e.u, 1);
  }
  return net.max_flow(2 * s + 1, 2 * t, limit);
}

FlowNetwork edge_network(const Graph& g) {
  FlowNetwork net(g.order());
  net.reserve_arcs(2 * g.size());
  for (const Edge& e : g.edges()) {
    net.add_arc(e.u, e.v, 1);
    net.add_arc(e.v, e.u, 1);
  }
  return net;
}

}  // namespace

int connectivity(const Graph& g) {
  int n = g.order();
  if (n <= 1 || !is_connected(g)) return 0;
  if (g.is_complete()) return n - 1;
  int best = n - 1;
  for (Vertex i = 0; i <= best && i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      best = std::min(best, vertex_disjoint_paths(g, i, j, best));
    }
  }
  return best;
}

int edge_connectivity(const Graph& g) {
  int n = g.order();
  if (n <= 1 || !is_connected(g)) return 0;
  int best = g.min_degree();
  FlowNetwork net = edge_network(g);
  for (Vertex t = 1; t < n && best > 0; ++t) {
    net.reset();
    best = std::min(best, net.max_flow(0, t, best));
  }
  return best;
}

bool edge_connectivity_at_least(const Graph& g, int k) {
  if (k <= 0) return true;
  int n = g.order();
  if (n <= 1 || g.min_degree() < k || !is_connected(g)) return false;
  if (k == 1) return true;
  if (k == 2) return is_two_edge_connected(g);
  FlowNetwork net = edge_network(g);
  for (Vertex t = 1; t < n; ++t) {
    net.reset();
    if (net.max_flow(0, t, k) < k) return false;
  }
  return true;
}

CutStructure bridges_and_cut_vertices(const Graph& g) {
  int n = g.order();
  CutStructure out;
  std::vector<int> order(n, -1);
  std::vector<int> low(n, 0);
  std::vector<char> is_cut(n, 0);
  struct Frame {
    Vertex v;
    int parent_edge;
    int next;
  };
  std::vector<Frame> stack;
  int clock = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (order[root] >= 0) continue;
    int root_children = 0;
    order[root] = low[root] = clock++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto row = g.incident(f.v);
      if (f.next < static_cast<int>(row.size())) {
        const Incidence& inc = row[f.next++];
        if (inc.edge == f.parent_edge) continue;
        if (order[inc.to] >= 0) {
          low[f.v] = std::min(low[f.v], order[inc.to]);
        } else {
          order[inc.to] = low[inc.to] = clock++;
          if (f.v == root) ++root_children;
          stack.push_back({inc.to, inc.edge, 0});
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      Vertex parent = stack.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] > order[parent]) out.bridges.push_back(done.parent_edge);
      if (parent != root && low[done.v] >= order[parent]) is_cut[parent] = 1;
    }
    if (root_children >= 2) is_cut[root] = 1;
  }
  std::sort(out.bridges.begin(), out.bridges.end());
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  return out;
}

CutStructure cut_structure(const Graph& g) {
  CutStructure out = bridges_and_cut_vertices(g);
  out.kappa = connectivity(g);
  out.kappa_prime = edge_connectivity(g);
  return out;
}

bool is_two_connected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && bridges_and_cut_vertices(g).cut_vertices.empty();
}

bool is_two_edge_connected(const Graph& g) {
  return g.order() >= 2 && is_connected(g) && bridges_and_cut_vertices(g).bridges.empty();
}

namespace {

// BFS 2-coloring; on conflict returns the offending edge through `conflict`.
std::vector<int> two_color(const Graph& g, std::vector<Vertex>& parent, int& conflict) {
  int n = g.order();
  std::vector<int> side(n, -1);
  parent.assign(n, -1);
  conflict = -1;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Vertex x = queue[i];
      for (const Incidence& inc : g.incident(x)) {
        if (side[inc.to] < 0) {
          side[inc.to] = 1 - side[x];
          parent[inc.to] = x;
          queue.push_back(inc.to);
        } else if (side[inc.to] == side[x] && conflict < 0) {
          conflict = inc.edge;
        }
      }
    }
  }
  return side;
}

}  // namespace

std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<Vertex> parent;
  int conflict = -1;
  std::vector<int> side = two_color(g, parent, conflict);
  if (conflict >= 0) return std::nullopt;
  Bipartition b;
  b.side = side;
  for (Vertex v = 0; v < g.order(); ++v) (side[v] == 0 ? b.side_u : b.side_v).push_back(v);
  return b;
}

std::vector<Vertex> find_odd_cycle(const Graph& g) {
  std::vector<Vertex> parent;
  int conflict = -1;
  two_color(g, parent, conflict);
  if (conflict < 0) return {};
  // Walk both endpoints up the BFS forest to their common ancestor.
  Vertex a = g.edge(conflict).u;
  Vertex b = g.edge(conflict).v;
  std::vector<Vertex> up_a{a};
  std::vector<Vertex> up_b{b};
  auto depth_of = [&](Vertex x) {
    int d = 0;
    while (parent[x] >= 0) {
      x = parent[x];
      ++d;
    }
    return d;
  };
  int da = depth_of(a);
  int db = depth_of(b);
  while (da > db) {
    a = parent[a];
    up_a.push_back(a);
    --da;
  }
  while (db > da) {
    b = parent[b];
    up_b.push_back(b);
    --db;
  }
  while (a != b) {
    a = parent[a];
    b = parent[b];
    up_a.push_back(a);
    up_b.push_back(b);
  }
  up_b.pop_back();
  std::vector<Vertex> cycle = up_a;
  cycle.insert(cycle.end(), up_b.rbegin(), up_b.rend());
  return cycle;
}

int diameter(const Graph& g) {
  require(g.order() > 0, ErrorKind::kDisconnected, "diameter of the empty graph");
  int best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (int d : bfs_distances(g, s)) {
      require(d >= 0, ErrorKind::kDisconnected, "graph is disconnected: diameter is infinite");
      best = std::max(best, d);
    }
  }
  return best;
}

std::array<std::vector<Vertex>, 2> two_fan(const Graph& g, Vertex v,
                                           std::span<const Vertex> target) {
  int n = g.order();
  require(v >= 0 && v < n, ErrorKind::kPrecondition, "fan source out of range");
  std::vector<char> in_target(n, 0);
  for (Vertex t : target) {
    require(t >= 0 && t < n, ErrorKind::kPrecondition, "fan target out of range");
    in_target[t] = 1;
  }
  require(!in_target[v], ErrorKind::kPrecondition, "fan source lies in the target set");
  int distinct = static_cast<int>(std::count(in_target.begin(), in_target.end(), 1));
  require(distinct >= 2, ErrorKind::kPrecondition, "fan target needs at least two vertices");
  require(is_two_connected(g), ErrorKind::kPrecondition, "graph is not 2-connected");

  // Node 2x is x_in, 2x+1 is x_out; node 2n is the sink.
  int sink = 2 * n;
  FlowNetwork net(2 * n + 1);
  for (Vertex x = 0; x < n; ++x) {
    if (in_target[x]) {
      net.add_arc(2 * x, sink, 1);
    } else if (x != v) {
      net.add_arc(2 * x, 2 * x + 1, 1);
    }
  }
  for (Vertex x = 0; x < n; ++x) {
    if (in_target[x]) continue;
    for (const Incidence& inc : g.incident(x)) {
      if (inc.to != v) net.add_arc(2 * x + 1, 2 * inc.to, 1);
    }
  }
  int flow = net.max_flow(2 * v + 1, sink, 2);
  require(flow == 2, ErrorKind::kInternal,
          "no 2-fan found although the graph is 2-connected");

  std::array<std::vector<Vertex>, 2> paths;
  int k = 0;
  // Follow saturated forward arcs out of v_out; each unit of flow is one path.
  std::vector<int> first_arcs;
  net.for_each_arc(2 * v + 1, [&](int a) {
    if (net.is_forward(a) && net.flow_on(a) > 0) first_arcs.push_back(a);
  });
  for (int a : first_arcs) {
    std::vector<Vertex>& path = paths[k++];
    path.push_back(v);
    int node = net.arc_head(a);  // some x_in
    while (node != sink) {
      Vertex x = node / 2;
      path.push_back(x);
      if (in_target[x]) break;
      int out = 2 * x + 1;
      int next = -1;
      net.for_each_arc(out, [&](int b) {
        if (next < 0 && net.is_forward(b) && net.flow_on(b) > 0) next = b;
      });
      node = net.arc_head(next);
    }
  }
  return paths;
}

std::vector<Edge> maximum_matching(std::span<const Vertex> x, std::span<const Vertex> y,
                                   const Graph& g) {
  int n = g.order();
  std::vector<char> in_y(n, 0);
  for (Vertex b : y) in_y[b] = 1;
  std::vector<Vertex> xs(x.begin(), x.end());
  std::sort(xs.begin(), xs.end());
  std::vector<Vertex> mate(n, -1);
  std::vector<int> seen(n, -1);
  int stamp = 0;
  // Kuhn's augmenting path search; recursion depth is bounded by |x|.
  auto augment = [&](auto&& self, Vertex a) -> bool {
    for (const Incidence& inc : g.incident(a)) {
      Vertex b = inc.to;
      if (!in_y[b] || seen[b] == stamp) continue;
      seen[b] = stamp;
      if (mate[b] < 0 || self(self, mate[b])) {
        mate[b] = a;
        mate[a] = b;
        return true;
      }
    }
    return false;
  };
  for (Vertex a : xs) {
    ++stamp;
    augment(augment, a);
  }
  std::vector<Edge> out;
  for (Vertex a : xs)
    if (mate[a] >= 0) out.push_back(make_edge(a, mate[a]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pconn
