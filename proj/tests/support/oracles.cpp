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

#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace pconn::testing {

namespace {

int color_of(const Graph& g, const EdgeColoring& c, Vertex a, Vertex b) {
  for (int id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(id);
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return c[id];
  }
  return 0;
}

struct PathEnumerator {
  const Graph& g;
  const EdgeColoring& c;
  Vertex target;
  std::vector<char> on_path;
  std::uint64_t combos = 0;
  bool stop_at_first = false;

  // Returns true to stop early.
  bool dfs(Vertex x, int first, int last) {
    for (Vertex y : g.neighbors(x)) {
      if (on_path[y]) continue;
      int col = color_of(g, c, x, y);
      if (col == last) continue;
      int start = first == 0 ? col : first;
      if (y == target) {
        combos |= std::uint64_t{1} << ((start - 1) * c.k + (col - 1));
        if (stop_at_first) return true;
        continue;
      }
      on_path[y] = 1;
      bool done = dfs(y, start, col);
      on_path[y] = 0;
      if (done) return true;
    }
    return false;
  }
};

}  // namespace

std::uint64_t oracle_combos(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v) {
  PathEnumerator e{g, c, v, std::vector<char>(g.order(), 0)};
  e.on_path[u] = 1;
  e.dfs(u, 0, 0);
  return e.combos;
}

bool oracle_proper_path(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v) {
  PathEnumerator e{g, c, v, std::vector<char>(g.order(), 0)};
  e.stop_at_first = true;
  e.on_path[u] = 1;
  return e.dfs(u, 0, 0);
}

bool oracle_proper_connected(const Graph& g, const EdgeColoring& c) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!oracle_proper_path(g, c, u, v)) return false;
  return true;
}

bool oracle_strong(const Graph& g, const EdgeColoring& c) {
  int k = c.k;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      std::uint64_t combos = oracle_combos(g, c, u, v);
      bool found = false;
      for (int i = 0; i < k * k && !found; ++i)
        for (int j = 0; j < k * k && !found; ++j)
          found = ((combos >> i) & 1) && ((combos >> j) & 1) && i / k != j / k && i % k != j % k;
      if (!found) return false;
    }
  }
  return true;
}

bool oracle_proper_walk(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v) {
  // State (x, last color); last color 0 only at the source.
  int k = c.k;
  std::vector<char> seen(static_cast<std::size_t>(g.order()) * (k + 1), 0);
  std::deque<std::pair<Vertex, int>> queue{{u, 0}};
  seen[u * (k + 1)] = 1;
  while (!queue.empty()) {
    auto [x, last] = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      int col = color_of(g, c, x, y);
      if (col == last) continue;
      if (y == v) return true;
      if (!seen[y * (k + 1) + col]) {
        seen[y * (k + 1) + col] = 1;
        queue.push_back({y, col});
      }
    }
  }
  return false;
}

int oracle_pc(const Graph& g, int k_max) {
  int m = g.size();
  for (int k = 1; k <= k_max; ++k) {
    EdgeColoring c(k, m, 1);
    while (true) {
      if (oracle_proper_connected(g, c)) return k;
      int i = 0;
      while (i < m && c[i] == k) c[i++] = 1;
      if (i == m) break;
      ++c[i];
    }
  }
  return 0;
}

bool oracle_connected(const Graph& g, const std::vector<char>& removed_vertex,
                      const std::vector<char>& removed_edge) {
  int n = g.order();
  auto gone = [&](Vertex x) { return !removed_vertex.empty() && removed_vertex[x]; };
  Vertex start = -1;
  int alive = 0;
  for (Vertex x = 0; x < n; ++x) {
    if (gone(x)) continue;
    ++alive;
    if (start < 0) start = x;
  }
  if (alive <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (int id = 0; id < g.size(); ++id) {
      if (!removed_edge.empty() && removed_edge[id]) continue;
      const Edge& e = g.edge(id);
      if (!e.has(x)) continue;
      Vertex y = e.other(x);
      if (gone(y) || seen[y]) continue;
      seen[y] = 1;
      ++reached;
      stack.push_back(y);
    }
  }
  return reached == alive;
}

int oracle_connectivity(const Graph& g) {
  int n = g.order();
  if (!oracle_connected(g)) return 0;
  int best = n - 1;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size >= best || n - size < 2) continue;
    std::vector<char> removed(n, 0);
    for (int x = 0; x < n; ++x) removed[x] = (mask >> x) & 1;
    if (!oracle_connected(g, removed)) best = size;
  }
  return best;
}

int oracle_edge_connectivity(const Graph& g) {
  if (g.order() < 2 || !oracle_connected(g)) return 0;
  int m = g.size();
  int best = g.min_degree();
  // Try every edge subset of size below the current best.
  std::vector<int> pick;
  std::function<bool(int, int)> search = [&](int from, int left) {
    if (left == 0) {
      std::vector<char> removed(m, 0);
      for (int id : pick) removed[id] = 1;
      return !oracle_connected(g, {}, removed);
    }
    for (int id = from; id < m; ++id) {
      pick.push_back(id);
      bool hit = search(id + 1, left - 1);
      pick.pop_back();
      if (hit) return true;
    }
    return false;
  };
  for (int s = 1; s < best; ++s)
    if (search(0, s)) return s;
  return best;
}

int oracle_diameter(const Graph& g) {
  int n = g.order();
  const int inf = n + 1;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int x = 0; x < n; ++x) d[x][x] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int w = 0; w < n; ++w)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) d[x][y] = std::min(d[x][y], d[x][w] + d[w][y]);
  int best = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) best = std::max(best, d[x][y]);
  return best >= inf ? -1 : best;
}

bool oracle_bipartite(const Graph& g) {
  int n = g.order();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (const Edge& e : g.edges()) ok = ok && (((mask >> e.u) ^ (mask >> e.v)) & 1);
    if (ok) return true;
  }
  return false;
}

Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.push_back(make_edge(order[i], order[pick(rng)]));
  }
  std::bernoulli_distribution coin(p);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (std::find(edges.begin(), edges.end(), make_edge(a, b)) == edges.end() && coin(rng))
        edges.push_back(make_edge(a, b));
  return Graph(n, std::move(edges));
}

Graph random_two_connected_diam3(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> density(0.12, 0.35);
  while (true) {
    Graph g = random_connected(n, density(rng), rng);
    if (g.is_complete() || oracle_diameter(g) != 3) continue;
    bool two_connected = true;
    for (Vertex x = 0; x < n && two_connected; ++x) {
      std::vector<char> removed(n, 0);
      removed[x] = 1;
      two_connected = oracle_connected(g, removed);
    }
    if (two_connected) return g;
  }
}

EdgeColoring random_coloring_rng(const Graph& g, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(1, k);
  EdgeColoring c(k, g.size());
  for (int& x : c.color) x = pick(rng);
  return c;
}

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back(make_edge(perm[e.u], perm[e.v]));
  return Graph(g.order(), std::move(edges));
}

}  // namespace pconn::testing
