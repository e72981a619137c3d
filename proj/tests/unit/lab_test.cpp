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

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "common/error.hpp"
#include "construct/lemmas.hpp"
#include "graph/algorithms.hpp"
#include "lab/gadget.hpp"
#include "lab/refute.hpp"
#include "proper/checks.hpp"
#include "proper/engine.hpp"
#include "solver/sampling.hpp"
#include "support/oracles.hpp"

namespace pconn {
namespace {

bool predicate_ok(const StructureReport& r, const std::string& name) {
  for (const auto& p : r.predicates)
    if (p.name == name) return p.ok;
  ADD_FAILURE() << "no predicate " << name;
  return false;
}

TEST(GadgetTest, SizesAtScaleOne) {
  Counterexample k33 = build_counterexample(BlockKind::kK33, 1);
  EXPECT_EQ(k33.graph.order(), 114);
  EXPECT_EQ(k33.graph.size(), 189);
  Counterexample mini = build_counterexample(BlockKind::kMiniPath, 1);
  EXPECT_EQ(mini.graph.order(), 27);
  EXPECT_EQ(mini.graph.size(), 30);
  EXPECT_THROW(build_counterexample(BlockKind::kK33, 0), Error);
  EXPECT_THROW(parse_block_kind("k44"), Error);
}

TEST(GadgetTest, StructureHoldsAcrossScales) {
  for (BlockKind kind : {BlockKind::kK33, BlockKind::kMiniPath}) {
    for (int scale = 1; scale <= 3; ++scale) {
      Counterexample ce = build_counterexample(kind, scale);
      StructureReport r = verify_gadget_structure(ce.graph, ce.spec);
      EXPECT_TRUE(r.ok) << structure_report_to_json(r);
      EXPECT_EQ(connectivity(ce.graph), 2);
      if (kind == BlockKind::kK33) EXPECT_GE(ce.graph.min_degree(), 3);
      for (const GadgetPair& pair : ce.spec.pairs) EXPECT_NE(pair.x.parity, pair.x_prime.parity);
    }
  }
}

TEST(GadgetTest, SpecJsonRoundTrip) {
  Counterexample ce = build_counterexample(BlockKind::kK33, 2);
  std::string text = gadget_spec_to_json(ce.spec);
  GadgetSpec back = gadget_spec_from_json(text);
  EXPECT_EQ(gadget_spec_to_json(back), text);
  EXPECT_TRUE(verify_gadget_structure(ce.graph, back).ok);
  EXPECT_THROW(gadget_spec_from_json("{"), Error);
  EXPECT_THROW(gadget_spec_from_json("{\"kind\":\"k33\"}"), Error);
}

// Every simple p-p' path inside a half has the half's parity.
void expect_half_parity(const Graph& g, const GadgetPair& pair, const HalfSpec& half) {
  std::vector<char> allowed(g.order(), 0);
  for (Vertex v : half.vertices) allowed[v] = 1;
  allowed[pair.p] = allowed[pair.p_prime] = 1;
  std::vector<char> on_path(g.order(), 0);
  int paths = 0;
  std::function<void(Vertex, int)> dfs = [&](Vertex x, int len) {
    for (Vertex y : g.neighbors(x)) {
      if (!allowed[y] || on_path[y]) continue;
      if (y == pair.p_prime) {
        ++paths;
        EXPECT_EQ((len + 1) % 2, half.parity);
        continue;
      }
      on_path[y] = 1;
      dfs(y, len + 1);
      on_path[y] = 0;
    }
  };
  on_path[pair.p] = 1;
  dfs(pair.p, 0);
  EXPECT_GT(paths, 0);
}

TEST(GadgetTest, HalfParitiesByPathEnumeration) {
  for (auto [kind, scale] : {std::pair{BlockKind::kMiniPath, 1}, {BlockKind::kMiniPath, 2},
                             {BlockKind::kK33, 1}}) {
    Counterexample ce = build_counterexample(kind, scale);
    for (const GadgetPair& pair : ce.spec.pairs) {
      expect_half_parity(ce.graph, pair, pair.x);
      expect_half_parity(ce.graph, pair, pair.x_prime);
    }
  }
}

// Mutation: an extra edge inside the even half that joins two vertices at
// even distance flips some path parity.
TEST(GadgetTest, OddChordBreaksParity) {
  Counterexample ce = build_counterexample(BlockKind::kK33, 1);
  const HalfSpec& x = ce.spec.pairs[0].x;
  const BlockInfo& b = x.blocks[0];
  std::vector<int> dist = bfs_distances(ce.graph, b.entry);
  Vertex other = -1;
  for (Vertex v : b.vertices)
    if (v != b.entry && dist[v] == 2) other = v;
  ASSERT_GE(other, 0);
  std::vector<Edge> edges = ce.graph.edges();
  edges.push_back(make_edge(b.entry, other));
  StructureReport r = verify_gadget_structure(Graph(ce.graph.order(), edges), ce.spec);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(predicate_ok(r, "opposite_parities"));
}

// Mutation: contracting a cut edge of a half removes it as a cut edge.
TEST(GadgetTest, ContractedCutEdgeIsDetected) {
  Counterexample ce = build_counterexample(BlockKind::kMiniPath, 2);
  Edge f = ce.spec.pairs[1].x.f;
  auto map = [&](Vertex v) { return v == f.v ? f.u : (v > f.v ? v - 1 : v); };
  std::vector<Edge> edges;
  for (const Edge& e : ce.graph.edges())
    if (e != f) edges.push_back(make_edge(map(e.u), map(e.v)));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Graph g(ce.graph.order() - 1, edges);
  StructureReport r = verify_gadget_structure(g, ce.spec);
  EXPECT_FALSE(r.ok);
  // The original spec no longer fits the graph; the check must say why
  // rather than crash.
  EXPECT_FALSE(structure_report_to_json(r).empty());
}

TEST(GadgetTest, RemovingALinkingEdgeIsDetected) {
  Counterexample ce = build_counterexample(BlockKind::kMiniPath, 1);
  Edge l = ce.spec.linking[0];
  std::vector<Edge> edges;
  for (const Edge& e : ce.graph.edges())
    if (e != l) edges.push_back(e);
  StructureReport r = verify_gadget_structure(Graph(ce.graph.order(), edges), ce.spec);
  EXPECT_FALSE(r.ok);
}

TEST(RefuteTest, WitnessesHaveNoProperPath) {
  Counterexample ce = build_counterexample(BlockKind::kMiniPath, 1);
  for (std::uint64_t t = 0; t < 300; ++t) {
    EdgeColoring c = random_coloring(ce.graph, 2, 5, t);
    for (bool structural : {false, true}) {
      RefuteOptions opt;
      opt.structural_first = structural;
      auto w = refute_2_coloring(ce.graph, ce.spec, c, opt);
      ASSERT_TRUE(w.has_value());
      ASSERT_FALSE(testing::oracle_proper_path(ce.graph, c, w->pair.first, w->pair.second));
      if (structural) {
        ASSERT_EQ(w->route, RefutationRoute::kStructural);
        ASSERT_NE(w->gadgets.first, w->gadgets.second);
      }
      ASSERT_FALSE(witness_to_json(*w).empty());
    }
  }
}

TEST(RefuteTest, OneWayVerticesEscapeOnlyThroughTheirExit) {
  Counterexample ce = build_counterexample(BlockKind::kK33, 1);
  for (std::uint64_t t = 0; t < 50; ++t) {
    EdgeColoring c = random_coloring(ce.graph, 2, 9, t);
    for (int i = 0; i < 3; ++i) {
      auto ow = find_one_way_vertex(ce.graph, ce.spec, i, c);
      if (!ow) continue;
      bool near = can_escape(ce.graph, ce.spec, i, c, ow->vertex, Escape::kNear);
      bool far = can_escape(ce.graph, ce.spec, i, c, ow->vertex, Escape::kFar);
      EXPECT_FALSE(near && far);
      EXPECT_EQ(ow->exit == Escape::kNear, near);
      EXPECT_EQ(ow->exit == Escape::kFar, far);
    }
  }
}

TEST(RefuteTest, TrialsAreDeterministic) {
  Counterexample ce = build_counterexample(BlockKind::kK33, 1);
  RefuteSummary a = refute_trials(ce.graph, ce.spec, 60, 7, 1);
  RefuteSummary b = refute_trials(ce.graph, ce.spec, 60, 7, 2);
  EXPECT_EQ(a.defeated, 60u);
  EXPECT_EQ(a.defeated, b.defeated);
  EXPECT_EQ(a.direct, b.direct);
  for (std::size_t i = 0; i < a.outcomes.size(); ++i)
    EXPECT_EQ(a.outcomes[i].witness->pair, b.outcomes[i].witness->pair);
}

TEST(RefuteTest, ThreeColoringsAreOutOfScope) {
  Counterexample ce = build_counterexample(BlockKind::kMiniPath, 1);
  EdgeColoring c3 = color_2connected_3(ce.graph);
  EXPECT_TRUE(is_proper_connected(ce.graph, c3).ok);
  EXPECT_THROW(refute_2_coloring(ce.graph, ce.spec, c3), Error);
}

}  // namespace
}  // namespace pconn
