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

// Acceptance checks. Each criterion prints one PASS or FAIL line; pass a
// criterion name (AC1..AC7) to run only that one.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "construct/diam3.hpp"
#include "construct/lemmas.hpp"
#include "graph/algorithms.hpp"
#include "graph/io.hpp"
#include "graph/named.hpp"
#include "lab/gadget.hpp"
#include "lab/refute.hpp"
#include "proper/checks.hpp"
#include "proper/engine.hpp"
#include "solver/sampling.hpp"
#include "solver/search.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace {

using namespace pconn;
using testing::for_each_graph;

struct Outcome {
  bool ok = true;
  std::string detail;
  // Records a failure with its message; keeps the first message only.
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string g6(const Graph& g) { return format_graph6(g); }

Outcome ac1() {
  Outcome out;
  for (int n = 3; n <= 6; ++n)
    if (pc_exact(named::complete(n), 3).value != 1) out.fail("K" + std::to_string(n));
  for (int m = 2; m <= 5; ++m) {
    PcResult r = pc_exact(named::star(m), m);
    if (!r.exact || r.value != m) out.fail("K1," + std::to_string(m));
  }
  for (int n = 4; n <= 8; ++n) {
    PcResult r = pc_exact(named::cycle(n), 3);
    if (!r.exact || r.value != 2) out.fail("C" + std::to_string(n));
  }
  int trees = 0;
  int oracle_checked = 0;
  for (int n = 2; n <= 9; ++n) {
    for_each_graph(n, {"-c"}, n - 1, n - 1, [&](const Graph& t) {
      ++trees;
      int delta = t.max_degree();
      PcResult r = pc_exact(t, delta);
      if (!r.exact || r.value != delta) out.fail("tree " + g6(t));
      if (n <= 7) {
        ++oracle_checked;
        if (testing::oracle_pc(t, delta) != delta) out.fail("oracle disagrees on " + g6(t));
      }
    });
  }
  if (out.ok) {
    out.detail = "K3..K6, K1,2..K1,5, C4..C8 and " + std::to_string(trees) + " trees (" +
                 std::to_string(oracle_checked) + " oracle-checked) exact";
  }
  return out;
}

Outcome ac2() {
  Outcome out;
  long graphs = 0;
  auto check = [&](const Graph& g) {
    ++graphs;
    EdgeColoring c = color_3ec(g);
    if (c.k != 2 || !is_proper_connected(g, c).ok || !has_strong_property(g, c, false).ok)
      out.fail("color_3ec failed on " + g6(g));
  };
  for (int n = 5; n <= 10; ++n) {
    for_each_graph(n, {"-c", "-d3"}, [&](const Graph& g) {
      if (!g.is_complete() && edge_connectivity_at_least(g, 3)) check(g);
    });
  }
  check(named::petersen());
  if (out.ok) out.detail = std::to_string(graphs) + " graphs with strong 2-colorings";
  return out;
}

Outcome ac3() {
  Outcome out;
  std::map<Diam3Case, long> tags;
  long corpus = 0;
  auto check = [&](const Graph& g) {
    Diam3Result r = color_diam3_detailed(g);
    ++tags[r.decomposition.tag];
    if (r.coloring.k != 2 || !is_proper_connected(g, r.coloring).ok)
      out.fail("color_diam3 failed on " + g6(g));
  };
  for (int n = 4; n <= 10; ++n) {
    for_each_graph(n, {"-C"}, [&](const Graph& g) {
      if (g.is_complete() || diameter(g) != 3) return;
      ++corpus;
      check(g);
    });
  }
  std::mt19937_64 rng(20260101);
  for (int i = 0; i < 500; ++i) check(testing::random_two_connected_diam3(11 + i % 4, rng));
  std::string counts;
  for (Diam3Case c : {Diam3Case::kThreeEC, Diam3Case::kCase1Sub11, Diam3Case::kCase1Sub12,
                      Diam3Case::kCase2OddCycle, Diam3Case::kCase2Bipartite}) {
    if (tags[c] == 0) out.fail("case " + diam3_case_name(c) + " never exercised");
    counts += " " + diam3_case_name(c) + "=" + std::to_string(tags[c]);
  }
  if (out.ok) out.detail = std::to_string(corpus) + " corpus + 500 random graphs;" + counts;
  return out;
}

Outcome ac4() {
  Outcome out;
  std::string sizes;
  for (BlockKind kind : {BlockKind::kK33, BlockKind::kMiniPath}) {
    Counterexample ce = build_counterexample(kind, 1);
    EdgeColoring c = color_2connected_3(ce.graph);
    if (c.k > 3 || c.colors_used() > 3) out.fail("too many colors");
    if (!is_proper_connected(ce.graph, c).ok) out.fail(block_kind_name(kind) + " not proper");
    if (!has_strong_property(ce.graph, c, false).ok)
      out.fail(block_kind_name(kind) + " not strong");
    sizes += " " + block_kind_name(kind) + "(n=" + std::to_string(ce.graph.order()) +
             ", colors=" + std::to_string(c.colors_used()) + ")";
  }
  if (out.ok) out.detail = "verified strong 3-colorings:" + sizes;
  return out;
}

Outcome ac5() {
  Outcome out;
  std::string detail;
  // (a) Seeded random 2-colorings, each refuted with a re-verified witness.
  for (auto [kind, trials] : {std::pair{BlockKind::kMiniPath, 10000}, {BlockKind::kK33, 1000}}) {
    Counterexample ce = build_counterexample(kind, 1);
    const std::uint64_t seed = 2026;
    for (bool structural : {false, true}) {
      RefuteOptions opt;
      opt.structural_first = structural;
      RefuteSummary s = refute_trials(ce.graph, ce.spec, trials, seed, 1, opt);
      if (!s.undefeated.empty()) out.fail(block_kind_name(kind) + " has undefeated samples");
      for (const TrialOutcome& t : s.outcomes) {
        if (!t.witness) continue;
        EdgeColoring c = random_coloring(ce.graph, 2, seed, t.trial);
        auto [u, v] = t.witness->pair;
        if (proper_path_exists(ce.graph, c, u, v)) out.fail("witness has a proper path");
      }
      detail += " " + block_kind_name(kind) + (structural ? "/structural " : "/default ") +
                std::to_string(s.defeated) + "/" + std::to_string(trials);
    }
  }
  // (b) Structure of the K33 instance.
  Counterexample k33 = build_counterexample(BlockKind::kK33, 1);
  StructureReport report = verify_gadget_structure(k33.graph, k33.spec);
  for (const char* name :
       {"connectivity_2", "min_degree_3", "two_cut_edges_per_half", "opposite_parities"}) {
    bool found = false;
    for (const auto& p : report.predicates)
      if (p.name == name) found = p.ok;
    if (!found) out.fail(std::string("K33 predicate ") + name);
  }
  if (!report.ok || connectivity(k33.graph) != 2 || k33.graph.min_degree() < 3)
    out.fail("K33 structure");
  // (c) Exhaustive 2-colorability verdict on MiniPath, against the golden report.
  Counterexample mini = build_counterexample(BlockKind::kMiniPath, 1);
  SearchOptions opt;
  opt.budget_nodes = std::int64_t{1} << 29;
  PcResult verdict = pc_exact(mini.graph, 2, opt);
  bool definitive = verdict.exact || verdict.lower == 3;
  bool two_colorable = verdict.exact && verdict.value <= 2;
  if (!definitive) out.fail("MiniPath search inconclusive");
  if (two_colorable && refute_2_coloring(mini.graph, mini.spec, *verdict.coloring))
    out.fail("refuter defeated a verified 2-coloring");
  std::ifstream golden_file(PCONN_GOLDEN_DIR "/minipath_k2_exact.json");
  nlohmann::json golden = nlohmann::json::parse(golden_file, nullptr, false);
  if (golden.is_discarded()) {
    out.fail("golden report missing");
  } else {
    const auto& payload = golden["payload"];
    if (payload["exact"].get<bool>() != verdict.exact ||
        payload["lower"].get<int>() != verdict.lower ||
        payload["nodes"].get<std::int64_t>() != verdict.nodes)
      out.fail("MiniPath verdict differs from the golden report");
  }
  if (out.ok) {
    detail += "; K33 structure verified; MiniPath 2-colorable: ";
    detail += two_colorable ? "yes" : "no";
    detail += " (" + std::to_string(verdict.nodes) + " nodes)";
    out.detail = "defeated" + detail;
  }
  return out;
}

Graph random_spanning_subgraph(const Graph& g, std::mt19937_64& rng) {
  std::vector<Edge> order = g.edges();
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> root(g.order());
  for (int i = 0; i < g.order(); ++i) root[i] = i;
  std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
  std::vector<Edge> keep;
  std::bernoulli_distribution extra(0.3);
  for (const Edge& e : order) {
    if (find(e.u) != find(e.v)) {
      root[find(e.u)] = find(e.v);
      keep.push_back(e);
    } else if (extra(rng)) {
      keep.push_back(e);
    }
  }
  return Graph(g.order(), keep);
}

Outcome ac6() {
  Outcome out;
  std::mt19937_64 rng(606);
  // Lift.
  for (int i = 0; i < 200; ++i) {
    Graph g = testing::random_connected(6 + i % 4, 0.35, rng);
    Graph h = random_spanning_subgraph(g, rng);
    PcResult r = pc_exact(h, h.max_degree());
    if (!r.exact) {
      out.fail("no exact value for a spanning subgraph");
      continue;
    }
    EdgeColoring lifted = lift_spanning_coloring(g, h, *r.coloring);
    if (!is_proper_connected(g, lifted).ok || !testing::oracle_proper_connected(g, lifted))
      out.fail("lift failed on " + g6(g));
  }
  // Vertex additions to pc-2 graphs.
  int extended = 0;
  int fallbacks = 0;
  for (int done = 0; done < 200;) {
    int n = 6 + done % 4;
    Graph base = testing::random_connected(n, 0.3, rng);
    if (base.is_complete()) continue;
    PcResult r = pc_exact(base, 2);
    if (!r.exact || r.value != 2) continue;
    std::vector<Vertex> nbrs(n);
    for (int x = 0; x < n; ++x) nbrs[x] = x;
    std::shuffle(nbrs.begin(), nbrs.end(), rng);
    std::vector<Edge> edges = base.edges();
    int deg = 2 + done % 3;
    for (int j = 0; j < deg; ++j) edges.push_back(make_edge(nbrs[j], n));
    Graph g(n + 1, edges);
    EdgeColoring c(2, g.size(), 1);
    for (int id = 0; id < base.size(); ++id)
      c[*g.edge_id(base.edge(id).u, base.edge(id).v)] = (*r.coloring)[id];
    ++done;
    std::optional<EdgeColoring> ext = extend_vertex_addition(g, c, n);
    if (!ext) {
      ++fallbacks;
      SearchOutcome s = exists_pc_coloring(g, 2, false);
      if (s.status != SearchStatus::kFound) continue;
      ext = s.coloring;
    } else {
      ++extended;
    }
    if (!testing::oracle_proper_connected(g, *ext)) out.fail("unverified extension " + g6(g));
  }
  // Bridgeless bipartite graphs.
  long bipartite = 0;
  for (int n = 4; n <= 10; ++n) {
    for_each_graph(n, {"-c", "-b", "-d2"}, [&](const Graph& g) {
      if (!is_two_edge_connected(g)) return;
      ++bipartite;
      EdgeColoring c = strong_2_coloring_bipartite(g);
      if (c.k != 2 || !has_strong_property(g, c, false).ok) out.fail("bipartite " + g6(g));
    });
  }
  if (out.ok) {
    out.detail = "200 lifts; 200 additions (" + std::to_string(extended) + " extended, " +
                 std::to_string(fallbacks) + " fell back); " + std::to_string(bipartite) +
                 " bridgeless bipartite graphs";
  }
  return out;
}

Outcome ac7() {
  Outcome out;
  long graphs = 0;
  long colorings = 0;
  long walk_checks = 0;
  auto check = [&](const Graph& g, const EdgeColoring& c) {
    ++colorings;
    bool oracle = true;
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        if (!testing::oracle_proper_path(g, c, u, v)) {
          oracle = false;
          continue;
        }
        ++walk_checks;
        if (!proper_walk_exists(g, c, u, v)) out.fail("walk filter false negative " + g6(g));
      }
    }
    if (is_proper_connected(g, c).ok != oracle) out.fail("checker mismatch on " + g6(g));
  };
  std::mt19937_64 rng(77);
  for (int n = 2; n <= 7; ++n) {
    for_each_graph(n, {"-c"}, [&](const Graph& g) {
      ++graphs;
      if (g.size() <= 12) {
        EdgeColoring c(2, g.size(), 1);
        for (std::uint32_t mask = 0; mask < (1U << g.size()); ++mask) {
          for (int id = 0; id < g.size(); ++id) c[id] = 1 + ((mask >> id) & 1);
          check(g, c);
        }
      } else {
        for (int t = 0; t < 64; ++t) check(g, testing::random_coloring_rng(g, 2 + t % 2, rng));
      }
    });
  }
  if (out.ok) {
    out.detail = std::to_string(graphs) + " graphs, " + std::to_string(colorings) +
                 " colorings, " + std::to_string(walk_checks) + " walk checks, 0 mismatches";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},
      {"AC5", ac5}, {"AC6", ac6}, {"AC7", ac7}};
  std::vector<std::string> wanted(argv + 1, argv + argc);
  bool all_ok = true;
  for (const auto& [name, run] : criteria) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), name) == wanted.end())
      continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s (%.1f s): %s\n", o.ok ? "PASS" : "FAIL", name.c_str(), sec,
                o.detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && o.ok;
  }
  return all_ok ? 0 : 1;
}
