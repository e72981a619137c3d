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

#include <random>

#include "common/error.hpp"
#include "graph/algorithms.hpp"
#include "graph/bipartite.hpp"
#include "graph/io.hpp"
#include "graph/named.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace pconn {
namespace {

using testing::for_each_graph;

TEST(GraphTest, RejectsSelfLoopsAndDuplicates) {
  EXPECT_THROW(Graph(3, {{0, 0}}), Error);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), Error);
  EXPECT_THROW(Graph(3, {{0, 3}}), Error);
}

TEST(GraphTest, EdgeIdsAndDegrees) {
  Graph g = named::wheel(5);
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.size(), 10);
  EXPECT_EQ(g.degree(0), 5);
  EXPECT_EQ(g.min_degree(), 3);
  for (int id = 0; id < g.size(); ++id) {
    EXPECT_EQ(g.edge_id(g.edge(id).u, g.edge(id).v), id);
    EXPECT_EQ(g.edge_id(g.edge(id).v, g.edge(id).u), id);
  }
  EXPECT_FALSE(g.adjacent(1, 3));
}

TEST(NamedGraphTest, Sizes) {
  EXPECT_EQ(named::complete(6).size(), 15);
  EXPECT_EQ(named::cycle(7).size(), 7);
  EXPECT_EQ(named::path(5).size(), 4);
  EXPECT_EQ(named::star(4).order(), 5);
  EXPECT_EQ(named::complete_bipartite(3, 4).size(), 12);
  EXPECT_EQ(named::petersen().size(), 15);
  EXPECT_EQ(named::hypercube(3).size(), 12);
  EXPECT_EQ(named::by_name("K3,3"), named::complete_bipartite(3, 3));
  EXPECT_EQ(named::by_name("petersen"), named::petersen());
  EXPECT_THROW(named::by_name("X9"), Error);
}

TEST(GraphIoTest, EdgeListRoundTrip) {
  Graph g = named::petersen();
  EXPECT_EQ(parse_edge_list(format_edge_list(g)), g);
  EXPECT_EQ(parse_graph("# comment\n3 2\n0 1\n\n1 2\n"), named::path(3));
}

TEST(GraphIoTest, Graph6RoundTripOnCorpus) {
  for_each_graph(6, {"-c"}, [](const Graph& g) {
    std::string s = format_graph6(g);
    ASSERT_EQ(parse_graph6(s), g) << s;
    ASSERT_EQ(parse_graph(s), g) << s;
  });
  EXPECT_EQ(format_graph6(named::complete(4)), "C~");
}

int parse_error_line(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(GraphIoTest, ParseErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("3 2\n0 1\n1 x\n"), 3);
  EXPECT_EQ(parse_error_line("3 2\n0 1\n1 5\n"), 3);
  EXPECT_EQ(parse_error_line("3 2\n# c\n0 1\n1 1\n"), 4);
  EXPECT_EQ(parse_error_line("3 2\n0 1\n1 0\n"), 3);
  EXPECT_EQ(parse_error_line("three\n"), 1);
  EXPECT_EQ(parse_error_line("3 3\n0 1\n1 2\n"), 4);
  EXPECT_EQ(parse_error_line("C~\nC\x7f\n"), 2);
}

TEST(AlgorithmsTest, ConnectivityMatchesBruteForce) {
  for (int n = 2; n <= 7; ++n) {
    for_each_graph(n, {}, [n](const Graph& g) {
      bool connected = testing::oracle_connected(g);
      ASSERT_EQ(is_connected(g), connected);
      if (!connected) return;
      ASSERT_EQ(connectivity(g), testing::oracle_connectivity(g)) << format_graph6(g);
      int lambda = testing::oracle_edge_connectivity(g);
      ASSERT_EQ(edge_connectivity(g), lambda) << format_graph6(g);
      for (int k = 1; k <= 4; ++k) ASSERT_EQ(edge_connectivity_at_least(g, k), lambda >= k);
      ASSERT_EQ(diameter(g), testing::oracle_diameter(g));
      ASSERT_EQ(bipartition(g).has_value(), testing::oracle_bipartite(g));
      ASSERT_EQ(is_two_connected(g), n >= 3 && testing::oracle_connectivity(g) >= 2);
    });
  }
}

TEST(AlgorithmsTest, BridgesAndCutVerticesMatchBruteForce) {
  for_each_graph(7, {"-c"}, [](const Graph& g) {
    CutStructure cs = cut_structure(g);
    std::vector<int> bridges;
    for (int id = 0; id < g.size(); ++id) {
      std::vector<char> removed(g.size(), 0);
      removed[id] = 1;
      if (!testing::oracle_connected(g, {}, removed)) bridges.push_back(id);
    }
    ASSERT_EQ(cs.bridges, bridges);
    std::vector<Vertex> cuts;
    for (Vertex x = 0; x < g.order(); ++x) {
      std::vector<char> removed(g.order(), 0);
      removed[x] = 1;
      if (!testing::oracle_connected(g, removed)) cuts.push_back(x);
    }
    ASSERT_EQ(cs.cut_vertices, cuts);
  });
}

TEST(AlgorithmsTest, OddCycleIsAnOddCycle) {
  for_each_graph(7, {"-c"}, [](const Graph& g) {
    std::vector<Vertex> cyc = find_odd_cycle(g);
    if (bipartition(g)) {
      ASSERT_TRUE(cyc.empty());
      return;
    }
    ASSERT_EQ(cyc.size() % 2, 1u);
    for (std::size_t i = 0; i < cyc.size(); ++i)
      ASSERT_TRUE(g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
  });
}

TEST(BipartiteTest, MaxCutSubgraphKeepsHalfTheEdges) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = testing::random_connected(9, 0.4, rng);
    Graph h = max_cut_bipartite_subgraph(g);
    EXPECT_EQ(h.order(), g.order());
    EXPECT_TRUE(bipartition(h).has_value());
    EXPECT_GE(2 * h.size(), g.size());
    for (const Edge& e : h.edges()) EXPECT_TRUE(g.adjacent(e.u, e.v));
  }
}

TEST(BipartiteTest, Maximal2ecSubgraphIsBipartiteAndBridgeless) {
  for_each_graph(7, {"-C"}, [](const Graph& g) {
    if (bipartition(g)) return;
    if (shortest_even_cycle(g).empty()) {
      ASSERT_THROW(maximal_2ec_bipartite_subgraph(g), Error);
      return;
    }
    BipartiteSubgraph h = maximal_2ec_bipartite_subgraph(g);
    InducedSubgraph sub = compact_edge_subgraph(g, h.edge_ids);
    ASSERT_TRUE(bipartition(sub.graph).has_value()) << format_graph6(g);
    ASSERT_TRUE(is_two_edge_connected(sub.graph)) << format_graph6(g);
    for (const Edge& e : sub.graph.edges())
      ASSERT_NE(h.side[sub.to_host[e.u]], h.side[sub.to_host[e.v]]);
  });
}

}  // namespace
}  // namespace pconn
