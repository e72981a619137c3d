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
#include <map>
#include <numeric>
#include <random>

#include "common/error.hpp"
#include "construct/diam3.hpp"
#include "construct/lemmas.hpp"
#include "graph/algorithms.hpp"
#include "graph/io.hpp"
#include "graph/named.hpp"
#include "proper/checks.hpp"
#include "solver/search.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace pconn {
namespace {

using testing::for_each_graph;

TEST(ChainTest, ChainsCoverBridgelessGraphs) {
  for_each_graph(7, {"-c"}, [](const Graph& g) {
    auto chains = chain_decomposition(g);
    int covered = 0;
    int cycles = 0;
    for (const auto& ch : chains) {
      covered += static_cast<int>(ch.size()) - 1;
      cycles += ch.front() == ch.back();
    }
    bool bridgeless = is_two_edge_connected(g);
    ASSERT_EQ(covered == g.size(), bridgeless) << format_graph6(g);
    if (bridgeless) ASSERT_EQ(cycles == 1, is_two_connected(g)) << format_graph6(g);
  });
}

TEST(LiftTest, SpanningSubgraphColoringLifts) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = testing::random_connected(8, 0.45, rng);
    // Random spanning tree of g by Kruskal over shuffled edges.
    std::vector<Edge> order = g.edges();
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> root(8);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    std::vector<Edge> keep;
    for (const Edge& e : order) {
      if (find(e.u) == find(e.v)) continue;
      root[find(e.u)] = find(e.v);
      keep.push_back(e);
    }
    Graph tree(8, keep);
    PcResult r = pc_exact(tree, 8);
    ASSERT_TRUE(r.exact);
    EdgeColoring lifted = lift_spanning_coloring(g, tree, *r.coloring);
    EXPECT_TRUE(testing::oracle_proper_connected(g, lifted));
    for (int id = 0; id < tree.size(); ++id)
      EXPECT_EQ(lifted[*g.edge_id(tree.edge(id).u, tree.edge(id).v)], (*r.coloring)[id]);
  }
}

TEST(LiftTest, RejectsNonSpanningSubgraph) {
  Graph g = named::cycle(5);
  Graph h(5, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_THROW(lift_spanning_coloring(g, h, EdgeColoring(2, 3, 1)), Error);
}

TEST(BipartiteStrongTest, BridgelessBipartiteGraphs) {
  for (int n = 4; n <= 8; ++n) {
    for_each_graph(n, {"-c", "-b", "-d2"}, [](const Graph& g) {
      if (!is_two_edge_connected(g)) {
        ASSERT_THROW(strong_2_coloring_bipartite(g), Error);
        return;
      }
      EdgeColoring c = strong_2_coloring_bipartite(g);
      ASSERT_EQ(c.k, 2);
      ASSERT_TRUE(testing::oracle_strong(g, c)) << format_graph6(g);
    });
  }
}

TEST(BipartiteStrongTest, RejectsOddCycleAndBridge) {
  EXPECT_THROW(strong_2_coloring_bipartite(named::cycle(5)), Error);
  EXPECT_THROW(strong_2_coloring_bipartite(named::path(4)), Error);
}

TEST(VertexAdditionTest, NeverReturnsUnverifiedColoring) {
  std::mt19937_64 rng(12);
  int extended = 0;
  for (int trial = 0; trial < 150; ++trial) {
    Graph base = testing::random_connected(7, 0.35, rng);
    PcResult r = pc_exact(base, 2);
    if (!r.exact) continue;
    // Attach a new vertex 7 to between two and four existing vertices.
    std::vector<Edge> edges = base.edges();
    std::vector<Vertex> nbrs{0, 1, 2, 3, 4, 5, 6};
    std::shuffle(nbrs.begin(), nbrs.end(), rng);
    int deg = 2 + trial % 3;
    for (int i = 0; i < deg; ++i) edges.push_back(make_edge(nbrs[i], 7));
    Graph g(8, edges);
    EdgeColoring c(2, g.size(), 1);
    for (int id = 0; id < base.size(); ++id)
      c[*g.edge_id(base.edge(id).u, base.edge(id).v)] = (*r.coloring)[id];
    auto out = extend_vertex_addition(g, c, 7);
    // Brute force over the colors at vertex 7.
    bool possible = false;
    EdgeColoring probe = c;
    std::vector<int> at_v;
    for (const Incidence& inc : g.incident(7)) at_v.push_back(inc.edge);
    for (std::uint32_t mask = 0; mask < (1U << deg) && !possible; ++mask) {
      for (int i = 0; i < deg; ++i) probe[at_v[i]] = 1 + ((mask >> i) & 1);
      possible = testing::oracle_proper_connected(g, probe);
    }
    ASSERT_EQ(out.has_value(), possible);
    if (!out) continue;
    ++extended;
    ASSERT_TRUE(testing::oracle_proper_connected(g, *out));
    for (int id = 0; id < g.size(); ++id)
      if (!g.edge(id).has(7)) ASSERT_EQ((*out)[id], c[id]);
  }
  EXPECT_GT(extended, 20);
  Graph pendant(3, {{0, 1}, {1, 2}});
  EXPECT_THROW(extend_vertex_addition(pendant, EdgeColoring(2, 2, 1), 2), Error);
}

TEST(TwoConnectedTest, ThreeColorsSufficeWithStrongProperty) {
  for (int n = 3; n <= 7; ++n) {
    for_each_graph(n, {"-C"}, [](const Graph& g) {
      EdgeColoring c = color_2connected_3(g);
      ASSERT_LE(c.k, 3);
      ASSERT_TRUE(testing::oracle_strong(g, c)) << format_graph6(g);
    });
  }
  EXPECT_THROW(color_2connected_3(named::path(4)), Error);
}

TEST(ThreeEdgeConnectedTest, StrongTwoColorings) {
  for (int n = 5; n <= 8; ++n) {
    for_each_graph(n, {"-c", "-d3"}, [](const Graph& g) {
      if (g.is_complete() || !edge_connectivity_at_least(g, 3)) return;
      EdgeColoring c = color_3ec(g);
      ASSERT_EQ(c.k, 2);
      ASSERT_TRUE(is_proper_connected(g, c).ok);
      ASSERT_TRUE(has_strong_property(g, c, false).ok) << format_graph6(g);
    });
  }
  EdgeColoring pet = color_3ec(named::petersen());
  EXPECT_TRUE(testing::oracle_strong(named::petersen(), pet));
  EXPECT_THROW(color_3ec(named::complete(5)), Error);
  EXPECT_THROW(color_3ec(named::cycle(6)), Error);
}

TEST(Diam3Test, ClassifiesKnownGraphs) {
  EXPECT_EQ(classify_diam3(named::cycle(7)).tag, Diam3Case::kCase2OddCycle);
  EXPECT_EQ(classify_diam3(named::cycle(6)).tag, Diam3Case::kCase2Bipartite);
  EXPECT_THROW(classify_diam3(named::petersen()), Error);
  EXPECT_THROW(classify_diam3(named::complete(4)), Error);
  EXPECT_THROW(classify_diam3(named::path(4)), Error);
}

TEST(Diam3Test, ColorsEveryGraphUpToEightVertices) {
  std::map<Diam3Case, int> tags;
  for (int n = 4; n <= 8; ++n) {
    for_each_graph(n, {"-C"}, [&](const Graph& g) {
      if (g.is_complete() || diameter(g) != 3) return;
      Diam3Result r = color_diam3_detailed(g);
      ++tags[r.decomposition.tag];
      ASSERT_EQ(r.coloring.k, 2);
      ASSERT_FALSE(r.used_fallback);
      ASSERT_TRUE(testing::oracle_proper_connected(g, r.coloring)) << format_graph6(g);
      ASSERT_FALSE(diam3_to_json(r.decomposition).empty());
    });
  }
  EXPECT_GT(tags[Diam3Case::kThreeEC], 0);
  EXPECT_GT(tags[Diam3Case::kCase2OddCycle], 0);
  EXPECT_GT(tags[Diam3Case::kCase2Bipartite], 0);
  EXPECT_GT(tags[Diam3Case::kCase1Sub11] + tags[Diam3Case::kCase1Sub12], 0);
}

TEST(Diam3Test, ResultDoesNotDependOnLabels) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = testing::shuffled(testing::random_two_connected_diam3(10, rng), rng);
    EdgeColoring c = color_diam3(g);
    ASSERT_TRUE(is_proper_connected(g, c).ok);
  }
}

}  // namespace
}  // namespace pconn
