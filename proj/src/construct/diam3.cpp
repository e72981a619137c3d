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

#include "construct/diam3.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "common/error.hpp"
#include "construct/lemmas.hpp"
#include "graph/algorithms.hpp"
#include "proper/checks.hpp"
#include "solver/search.hpp"

namespace pconn {

namespace {

constexpr std::int64_t kLocalSearchBudget = std::int64_t{1} << 20;

std::string pair_text(const VertexPair& p) {
  return std::to_string(p.first) + "," + std::to_string(p.second);
}

// Vertices reachable from `start` in g without using the edges in `skip`.
std::vector<int> side_labels(const Graph& g, int skip1, int skip2) {
  std::vector<int> label(g.order(), -1);
  int next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.incident(x)) {
        if (inc.edge == skip1 || inc.edge == skip2 || label[inc.to] >= 0) continue;
        label[inc.to] = next;
        stack.push_back(inc.to);
      }
    }
    ++next;
  }
  return label;
}

struct Labeling {
  Vertex u1, v1, u2, v2;
  std::vector<Vertex> h1, h2, q1, q2, q10, q11, q12, q20, q21, q22;
};

Labeling label_case1(const Graph& g, const std::vector<int>& side, int side1, int uedge,
                     int vedge) {
  Labeling l;
  auto split = [&](int id, Vertex& in1, Vertex& in2) {
    const Edge& e = g.edge(id);
    in1 = side[e.u] == side1 ? e.u : e.v;
    in2 = e.other(in1);
  };
  split(uedge, l.u1, l.u2);
  split(vedge, l.v1, l.v2);
  require(l.u1 != l.v1 && l.u2 != l.v2, ErrorKind::kInternal,
          "2-edge-cut endpoints coincide in a 2-connected graph");
  for (Vertex x = 0; x < g.order(); ++x) (side[x] == side1 ? l.h1 : l.h2).push_back(x);
  auto fill = [&](const std::vector<Vertex>& h, Vertex u, Vertex v, std::vector<Vertex>& q,
                  std::vector<Vertex>& q0, std::vector<Vertex>& qu, std::vector<Vertex>& qv) {
    for (Vertex x : h) {
      if (x == u || x == v) continue;
      q.push_back(x);
      bool au = g.adjacent(x, u);
      bool av = g.adjacent(x, v);
      if (!(au || av)) {
        fail(ErrorKind::kInternal, "vertex " + std::to_string(x) +
                                   " is not adjacent to either cut endpoint");
      }
      if (au && av) {
        q0.push_back(x);
      } else if (au) {
        qu.push_back(x);
      } else {
        qv.push_back(x);
      }
    }
  };
  fill(l.h1, l.u1, l.v1, l.q1, l.q10, l.q11, l.q12);
  fill(l.h2, l.u2, l.v2, l.q2, l.q20, l.q21, l.q22);
  return l;
}

void classify_case2(const Graph& g, Diam3Decomposition& d) {
  std::vector<Vertex> even = shortest_even_cycle(g);
  if (even.empty()) {
    d.tag = Diam3Case::kCase2OddCycle;
    require(g.min_degree() == 2 && g.max_degree() == 2, ErrorKind::kInternal,
            "graph without even cycles is not a cycle");
    Vertex prev = -1;
    Vertex cur = 0;
    do {
      d.odd_cycle.push_back(cur);
      Vertex next = g.incident(cur)[0].to == prev ? g.incident(cur)[1].to : g.incident(cur)[0].to;
      prev = cur;
      cur = next;
    } while (cur != 0);
    return;
  }
  d.tag = Diam3Case::kCase2Bipartite;
  d.h = maximal_2ec_bipartite_subgraph(g);
  const std::vector<int>& side = d.h.side;
  std::vector<char> seen(g.order(), 0);
  std::map<std::pair<Vertex, Vertex>, int> class_index;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0 || seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (const Incidence& inc : g.incident(comp[i])) {
        if (side[inc.to] < 0 && !seen[inc.to]) {
          seen[inc.to] = 1;
          comp.push_back(inc.to);
        }
      }
    }
    for (Vertex x : comp) {
      if (g.degree(x) != 2) {
        fail(ErrorKind::kInternal, "vertex " + std::to_string(x) + " of degree " +
                                   std::to_string(g.degree(x)) +
                                   " lies outside the maximal bipartite subgraph");
      }
    }
    if (comp.size() == 1) {
      d.singletons.push_back(s);
      continue;
    }
    if (comp.size() != 2) {
      fail(ErrorKind::kInternal, "component of G - H with " + std::to_string(comp.size()) +
                                 " vertices");
    }
    EdgeComponent b;
    auto anchor = [&](Vertex x, Vertex mate) {
      for (const Incidence& inc : g.incident(x))
        if (inc.to != mate) return inc.to;
      return Vertex{-1};
    };
    b.x = comp[0];
    b.y = comp[1];
    b.a = anchor(b.x, b.y);
    b.b = anchor(b.y, b.x);
    if (b.a > b.b) {
      std::swap(b.x, b.y);
      std::swap(b.a, b.b);
    }
    require(b.a != b.b, ErrorKind::kInternal, "edge component attached at a single vertex");
    require(side[b.a] == side[b.b], ErrorKind::kInternal,
            "edge component attached to opposite sides of H");
    auto [it, fresh] = class_index.try_emplace({b.a, b.b}, static_cast<int>(d.classes.size()));
    if (fresh) d.classes.push_back({b.a, b.b, {}});
    d.classes[it->second].members.push_back(static_cast<int>(d.edge_components.size()));
    d.edge_components.push_back(b);
  }
  std::sort(d.singletons.begin(), d.singletons.end());
  std::sort(d.classes.begin(), d.classes.end(),
            [](const AttachmentClass& x, const AttachmentClass& y) {
              return std::tie(x.a, x.b) < std::tie(y.a, y.b);
            });
}

// Strong 2-coloring of the bipartite subgraph formed by host edges `ids`.
void strong_color_edges(const Graph& g, const std::vector<int>& ids, EdgeColoring& c) {
  InducedSubgraph sub = compact_edge_subgraph(g, ids);
  EdgeColoring local = strong_2_coloring_bipartite(sub.graph);
  for (int e = 0; e < sub.graph.size(); ++e) c[sub.edge_to_host[e]] = local[e];
}

std::vector<int> ids_of(const Graph& g, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<int> ids;
  for (auto [a, b] : pairs) ids.push_back(*g.edge_id(a, b));
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<Vertex> sorted_union(std::initializer_list<const std::vector<Vertex>*> parts) {
  std::vector<Vertex> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Colors g[seed] by search, optionally extending `fixed` (host ids, 0 = free).
std::optional<EdgeColoring> search_seed(const Graph& g, const std::vector<Vertex>& seed,
                                        const EdgeColoring* fixed) {
  InducedSubgraph sub = induced_subgraph(g, seed);
  if (!is_connected(sub.graph) || sub.graph.order() < 2) return std::nullopt;
  SearchOptions opt;
  opt.budget_nodes = kLocalSearchBudget;
  EdgeColoring local_fixed(2, sub.graph.size());
  if (fixed) {
    for (int e = 0; e < sub.graph.size(); ++e) local_fixed[e] = (*fixed)[sub.edge_to_host[e]];
    opt.fixed = &local_fixed;
  }
  SearchOutcome o = exists_pc_coloring(sub.graph, 2, opt);
  if (o.status != SearchStatus::kFound) return std::nullopt;
  EdgeColoring c(2, g.size());
  for (int e = 0; e < sub.graph.size(); ++e) c[sub.edge_to_host[e]] = (*o.coloring)[e];
  return c;
}

bool seed_ok(const Graph& g, const std::vector<Vertex>& seed, const EdgeColoring& c) {
  InducedSubgraph sub = induced_subgraph(g, seed);
  EdgeColoring local(2, sub.graph.size());
  for (int e = 0; e < sub.graph.size(); ++e) local[e] = c[sub.edge_to_host[e]];
  return is_connected(sub.graph) && is_proper_connected(sub.graph, local).ok;
}

// Seed of Subcase 1.1: K_{2,|Q10|} and K_{2,|Q20|} joined by the cut edges,
// strong-colored, other induced edges color 1.
EdgeColoring seed_case11(const Graph& g, const Diam3Decomposition& d,
                         std::vector<Vertex>& seed) {
  seed = sorted_union({&d.q10, &d.q20});
  for (Vertex x : {d.u1, d.v1, d.u2, d.v2}) seed.push_back(x);
  std::sort(seed.begin(), seed.end());
  if (d.q10.empty() || d.q20.empty()) {
    auto c = search_seed(g, seed, nullptr);
    require(c.has_value(), ErrorKind::kInternal, "degenerate Case-1 seed has no 2-coloring");
    return *c;
  }
  std::vector<std::pair<Vertex, Vertex>> pairs{{d.u1, d.u2}, {d.v1, d.v2}};
  for (Vertex q : d.q10) {
    pairs.emplace_back(d.u1, q);
    pairs.emplace_back(d.v1, q);
  }
  for (Vertex q : d.q20) {
    pairs.emplace_back(d.u2, q);
    pairs.emplace_back(d.v2, q);
  }
  EdgeColoring c(2, g.size(), 1);
  strong_color_edges(g, ids_of(g, pairs), c);
  require(seed_ok(g, seed, c), ErrorKind::kInternal, "Case-1 seed coloring fails");
  return c;
}

// Seed of Subcase 1.2 with a nonempty E(Q11, Q12).
EdgeColoring seed_case12(const Graph& g, const Diam3Decomposition& d,
                         std::vector<Vertex>& seed) {
  seed = {d.u1, d.v1, d.u2, d.v2};
  for (const Edge& e : d.matching) {
    seed.push_back(e.u);
    seed.push_back(e.v);
  }
  seed.insert(seed.end(), d.q20.begin(), d.q20.end());
  std::sort(seed.begin(), seed.end());

  EdgeColoring fixed(2, g.size(), 0);
  std::vector<std::pair<Vertex, Vertex>> part2;
  for (Vertex q : d.q20) {
    part2.emplace_back(d.u2, q);
    part2.emplace_back(d.v2, q);
  }
  if (d.q20.size() >= 2) {
    strong_color_edges(g, ids_of(g, part2), fixed);
  } else {
    fixed[*g.edge_id(d.u2, d.q20[0])] = 1;
    fixed[*g.edge_id(d.q20[0], d.v2)] = 2;
  }
  std::vector<std::pair<Vertex, Vertex>> part1;
  for (const Edge& e : d.matching) {
    bool u_first = std::binary_search(d.q11.begin(), d.q11.end(), e.u);
    Vertex p = u_first ? e.u : e.v;
    Vertex q = e.other(p);
    part1.emplace_back(d.u1, p);
    part1.emplace_back(p, q);
    part1.emplace_back(q, d.v1);
  }
  if (d.matching.size() >= 2) {
    strong_color_edges(g, ids_of(g, part1), fixed);
  } else {
    for (std::size_t i = 0; i < part1.size(); ++i)
      fixed[*g.edge_id(part1[i].first, part1[i].second)] = i % 2 == 0 ? 1 : 2;
  }
  if (auto c = search_seed(g, seed, &fixed)) return *c;
  auto c = search_seed(g, seed, nullptr);
  require(c.has_value(), ErrorKind::kInternal, "Subcase-1.2 seed has no 2-coloring");
  return *c;
}

EdgeColoring grow_impl(const Graph& g, const std::vector<Vertex>& seed, const EdgeColoring& c0,
                       int* resolves) {
  int n = g.order();
  std::vector<char> present(n, 0);
  std::vector<Vertex> members = seed;
  for (Vertex v : seed) present[v] = 1;
  EdgeColoring c(2, g.size(), 0);
  for (int id = 0; id < g.size(); ++id)
    if (present[g.edge(id).u] && present[g.edge(id).v]) c[id] = c0[id];
  while (static_cast<int>(members.size()) < n) {
    Vertex w = -1;
    for (Vertex x = 0; x < n && w < 0; ++x) {
      if (present[x]) continue;
      int inside = 0;
      for (const Incidence& inc : g.incident(x)) inside += present[inc.to];
      if (inside >= 2) w = x;
    }
    if (w < 0) {
      Vertex v = 0;
      while (present[v]) ++v;
      std::string detail;
      if (members.size() >= 2 && is_two_connected(g)) {
        auto fan = two_fan(g, v, members);
        detail = ", fan ends at " + std::to_string(fan[0].back()) + " and " +
                 std::to_string(fan[1].back());
      }
      fail(ErrorKind::kInternal,
           "growth stalled: no vertex has two neighbors in the current subgraph (first missing " +
               std::to_string(v) + detail + ")");
    }
    members.push_back(w);
    InducedSubgraph sub = induced_subgraph(g, members);
    EdgeColoring local(2, sub.graph.size());
    for (int e = 0; e < sub.graph.size(); ++e) local[e] = c[sub.edge_to_host[e]];
    std::optional<EdgeColoring> ext = extend_vertex_addition(sub.graph, local, sub.from_host[w]);
    if (!ext) {
      if (resolves) ++*resolves;
      SearchOptions opt;
      opt.budget_nodes = kLocalSearchBudget;
      SearchOutcome o = exists_pc_coloring(sub.graph, 2, opt);
      if (o.status != SearchStatus::kFound) {
        fail(ErrorKind::kInternal, "no 2-coloring after adding vertex " + std::to_string(w));
      }
      ext = std::move(o.coloring);
    }
    for (int e = 0; e < sub.graph.size(); ++e) c[sub.edge_to_host[e]] = (*ext)[e];
    present[w] = 1;
  }
  return c;
}

EdgeColoring color_odd_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  int len = static_cast<int>(cycle.size());
  for (int shift = 0; shift < len; ++shift) {
    EdgeColoring c(2, g.size());
    for (int i = 0; i < len; ++i) {
      Vertex a = cycle[(i + shift) % len];
      Vertex b = cycle[(i + shift + 1) % len];
      c[*g.edge_id(a, b)] = i % 2 == 0 ? 1 : 2;
    }
    if (is_proper_connected(g, c).ok) return c;
  }
  SearchOutcome o = exists_pc_coloring(g, 2, false);
  require(o.status == SearchStatus::kFound, ErrorKind::kInternal, "odd cycle has no 2-coloring");
  return *o.coloring;
}

EdgeColoring color_case2_bipartite(const Graph& g, const Diam3Decomposition& d, int* resolves) {
  EdgeColoring c(2, g.size(), 0);
  strong_color_edges(g, d.h.edge_ids, c);
  const std::vector<int>& side = d.h.side;
  for (int id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(id);
    if (side[e.u] >= 0 && side[e.u] == side[e.v]) c[id] = 2;
  }
  for (const AttachmentClass& cls : d.classes) {
    if (cls.members.size() >= 2) {
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (int j : cls.members) {
        const EdgeComponent& b = d.edge_components[j];
        pairs.emplace_back(b.a, b.x);
        pairs.emplace_back(b.x, b.y);
        pairs.emplace_back(b.y, b.b);
      }
      strong_color_edges(g, ids_of(g, pairs), c);
    } else {
      const EdgeComponent& b = d.edge_components[cls.members[0]];
      c[*g.edge_id(b.a, b.x)] = 1;
      c[*g.edge_id(b.x, b.y)] = 2;
      c[*g.edge_id(b.y, b.b)] = 1;
    }
  }
  std::vector<Vertex> colored;
  std::vector<char> is_single(g.order(), 0);
  for (Vertex a : d.singletons) is_single[a] = 1;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!is_single[v]) colored.push_back(v);
  return grow_impl(g, colored, c, resolves);
}

}  // namespace

std::string diam3_case_name(Diam3Case c) {
  switch (c) {
    case Diam3Case::kThreeEC:
      return "ThreeEC";
    case Diam3Case::kCase1Sub11:
      return "Case1_Sub11";
    case Diam3Case::kCase1Sub12:
      return "Case1_Sub12";
    case Diam3Case::kCase2OddCycle:
      return "Case2_OddCycle";
    case Diam3Case::kCase2Bipartite:
      return "Case2_Bipartite";
  }
  return "unknown";
}

Diam3Decomposition classify_diam3(const Graph& g) {
  require(is_two_connected(g), ErrorKind::kPrecondition, "graph is not 2-connected");
  require(!g.is_complete(), ErrorKind::kPrecondition, "graph is complete");
  int diam = diameter(g);
  if (diam != 3) {
    fail(ErrorKind::kPrecondition, "graph has diameter " + std::to_string(diam) + ", need 3");
  }
  Diam3Decomposition d;
  // A cycle also has 2-edge-cuts; the odd cycles are colored directly.
  if (g.max_degree() == 2) {
    classify_case2(g, d);
    return d;
  }
  if (edge_connectivity_at_least(g, 3)) {
    d.tag = Diam3Case::kThreeEC;
    return d;
  }

  // Smallest 2-edge-cut (by edge ids) with both sides of size >= 3.
  int cut1 = -1;
  int cut2 = -1;
  std::vector<int> side;
  for (int e1 = 0; e1 < g.size() && cut1 < 0; ++e1) {
    std::vector<int> rest;
    for (int id = 0; id < g.size(); ++id)
      if (id != e1) rest.push_back(id);
    Graph without = edge_subgraph(g, rest);
    for (int b : bridges_and_cut_vertices(without).bridges) {
      int e2 = rest[b];
      if (e2 < e1) continue;
      std::vector<int> label = side_labels(g, e1, e2);
      int count0 = static_cast<int>(std::count(label.begin(), label.end(), 0));
      if (count0 >= 3 && g.order() - count0 >= 3) {
        cut1 = e1;
        cut2 = e2;
        side = std::move(label);
        break;
      }
    }
  }
  if (cut1 < 0) {
    classify_case2(g, d);
    return d;
  }

  const int options[4][3] = {{0, cut1, cut2}, {0, cut2, cut1}, {1, cut1, cut2}, {1, cut2, cut1}};
  std::optional<Labeling> chosen;
  for (int pass = 0; pass < 2 && !chosen; ++pass) {
    for (const auto& o : options) {
      Labeling l = label_case1(g, side, o[0], o[1], o[2]);
      bool fits = l.q22.empty() && (pass == 0 ? l.q12.empty() : l.q21.empty());
      if (fits) {
        chosen = std::move(l);
        d.tag = pass == 0 ? Diam3Case::kCase1Sub11 : Diam3Case::kCase1Sub12;
        break;
      }
    }
  }
  require(chosen.has_value(), ErrorKind::kInternal,
          "no labeling of the 2-edge-cut empties Q22 together with Q12 or Q21");
  Labeling& l = *chosen;
  d.u1 = l.u1;
  d.v1 = l.v1;
  d.u2 = l.u2;
  d.v2 = l.v2;
  d.h1 = std::move(l.h1);
  d.h2 = std::move(l.h2);
  d.q1 = std::move(l.q1);
  d.q2 = std::move(l.q2);
  d.q10 = std::move(l.q10);
  d.q11 = std::move(l.q11);
  d.q12 = std::move(l.q12);
  d.q20 = std::move(l.q20);
  d.q21 = std::move(l.q21);
  d.q22 = std::move(l.q22);
  if (d.tag == Diam3Case::kCase1Sub12) d.matching = maximum_matching(d.q11, d.q12, g);
  return d;
}

std::string diam3_to_json(const Diam3Decomposition& d) {
  nlohmann::json j;
  j["case"] = diam3_case_name(d.tag);
  if (d.tag == Diam3Case::kCase1Sub11 || d.tag == Diam3Case::kCase1Sub12) {
    j["cut"] = {{d.u1, d.u2}, {d.v1, d.v2}};
    j["u1"] = d.u1;
    j["v1"] = d.v1;
    j["u2"] = d.u2;
    j["v2"] = d.v2;
    j["H1"] = d.h1;
    j["H2"] = d.h2;
    j["Q10"] = d.q10;
    j["Q11"] = d.q11;
    j["Q12"] = d.q12;
    j["Q20"] = d.q20;
    j["Q21"] = d.q21;
    j["Q22"] = d.q22;
    nlohmann::json m = nlohmann::json::array();
    for (const Edge& e : d.matching) m.push_back({e.u, e.v});
    j["matching"] = m;
  } else if (d.tag == Diam3Case::kCase2OddCycle) {
    j["cycle"] = d.odd_cycle;
  } else if (d.tag == Diam3Case::kCase2Bipartite) {
    std::vector<Vertex> u;
    std::vector<Vertex> v;
    for (Vertex x : d.h.vertices) (d.h.side[x] == 0 ? u : v).push_back(x);
    j["H"] = {{"U", u}, {"V", v}, {"edges", d.h.edge_ids.size()}};
    j["A"] = d.singletons;
    nlohmann::json b = nlohmann::json::array();
    for (const auto& e : d.edge_components) b.push_back({e.x, e.y});
    j["B"] = b;
    nlohmann::json cls = nlohmann::json::array();
    for (const auto& c : d.classes) {
      nlohmann::json members = nlohmann::json::array();
      for (int i : c.members) members.push_back({d.edge_components[i].x, d.edge_components[i].y});
      cls.push_back({{"a", c.a}, {"b", c.b}, {"members", members}});
    }
    j["classes"] = cls;
  }
  return j.dump();
}

EdgeColoring grow_by_degree2_additions(const Graph& g, const std::vector<Vertex>& seed,
                                       const EdgeColoring& c0) {
  require(static_cast<int>(c0.color.size()) == g.size(), ErrorKind::kInvalidColoring,
          "seed coloring does not match the graph");
  return grow_impl(g, seed, c0, nullptr);
}

Diam3Result color_diam3_detailed(const Graph& g, const Diam3Options& options) {
  Diam3Result r;
  r.decomposition = classify_diam3(g);
  const Diam3Decomposition& d = r.decomposition;
  switch (d.tag) {
    case Diam3Case::kThreeEC:
      r.coloring = color_3ec(g);
      break;
    case Diam3Case::kCase1Sub11:
    case Diam3Case::kCase1Sub12: {
      std::vector<Vertex> seed;
      EdgeColoring c0 = (d.tag == Diam3Case::kCase1Sub12 && !d.matching.empty())
                            ? seed_case12(g, d, seed)
                            : seed_case11(g, d, seed);
      r.coloring = grow_impl(g, seed, c0, &r.local_resolves);
      break;
    }
    case Diam3Case::kCase2OddCycle:
      r.coloring = color_odd_cycle(g, d.odd_cycle);
      break;
    case Diam3Case::kCase2Bipartite:
      r.coloring = color_case2_bipartite(g, d, &r.local_resolves);
      break;
  }
  r.coloring.k = 2;
  ConnectivityVerdict v = is_proper_connected(g, r.coloring);
  if (!v.ok) {
    if (!options.search_fallback) {
      fail(ErrorKind::kInternal, diam3_case_name(d.tag) + " construction fails at pair " +
                                     pair_text(*v.failing_pair));
    }
    SearchOutcome o = exists_pc_coloring(g, 2, false);
    require(o.status == SearchStatus::kFound, ErrorKind::kInternal,
            "fallback search found no 2-coloring");
    r.coloring = *o.coloring;
    r.used_fallback = true;
  }
  return r;
}

EdgeColoring color_diam3(const Graph& g) { return color_diam3_detailed(g).coloring; }

}  // namespace pconn
