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
#include "graph/named.hpp"
#include "proper/blossom.hpp"
#include "proper/checks.hpp"
#include "proper/engine.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace pconn {
namespace {

using testing::for_each_graph;

EdgeColoring colors(int k, std::vector<int> c) {
  EdgeColoring out(k, static_cast<int>(c.size()));
  out.color = std::move(c);
  return out;
}

TEST(ColoringTest, ValidationAndJson) {
  Graph g = named::path(3);
  EXPECT_THROW(validate_coloring(g, colors(2, {1})), Error);
  EXPECT_THROW(validate_coloring(g, colors(2, {1, 3})), Error);
  EXPECT_THROW(validate_coloring(g, colors(2, {0, 1})), Error);
  EdgeColoring c = colors(2, {1, 2});
  EXPECT_EQ(coloring_from_json(g, coloring_to_json(g, c)), c);
  EXPECT_THROW(coloring_from_json(g, "{\"k\":2,\"edges\":[[0,2,1],[1,2,1]]}"), Error);
  EXPECT_THROW(coloring_from_json(g, "{\"k\":2,\"edges\":[[0,1,1]]}"), Error);
  EXPECT_THROW(coloring_from_json(g, "not json"), Error);
}

TEST(ProperPathTest, MonochromaticPathHasNoProperPath) {
  Graph g = named::path(3);
  EXPECT_FALSE(proper_path_exists(g, colors(2, {1, 1}), 0, 2).has_value());
  auto cert = proper_path_exists(g, colors(2, {1, 2}), 0, 2);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->path, (std::vector<Vertex>{0, 1, 2}));
}

// A walk may exist where no path does: the walk must revisit a vertex.
TEST(ProperPathTest, WalkWithoutPath) {
  // Triangle 1-2-3 hanging off 0 at 1, with 4 hanging off 1 as well.
  Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {1, 3}, {1, 4}});
  EdgeColoring c(2, g.size());
  c[*g.edge_id(0, 1)] = 1;
  c[*g.edge_id(1, 2)] = 2;
  c[*g.edge_id(2, 3)] = 1;
  c[*g.edge_id(1, 3)] = 2;
  c[*g.edge_id(1, 4)] = 1;
  EXPECT_TRUE(proper_walk_exists(g, c, 0, 4));
  EXPECT_FALSE(proper_path_exists(g, c, 0, 4).has_value());
  EXPECT_TRUE(testing::oracle_proper_walk(g, c, 0, 4));
  EXPECT_FALSE(testing::oracle_proper_path(g, c, 0, 4));
}

TEST(ProperPathTest, PathQueriesMatchOracleOnRandomColorings) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    Graph g = testing::random_connected(8, 0.3, rng);
    int k = 2 + trial % 2;
    EdgeColoring c = testing::random_coloring_rng(g, k, rng);
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        bool expect = testing::oracle_proper_path(g, c, u, v);
        auto cert = proper_path_exists(g, c, u, v);
        ASSERT_EQ(cert.has_value(), expect);
        if (cert) {
          ASSERT_TRUE(certificate_valid(g, c, *cert));
          ASSERT_EQ(cert->path.front(), u);
          ASSERT_EQ(cert->path.back(), v);
        }
        PathQuery q;
        q.source = u;
        q.target = v;
        ASSERT_EQ(proper_path_by_matching(g, c, q).has_value(), expect);
        bool walk = proper_walk_exists(g, c, u, v);
        ASSERT_EQ(walk, testing::oracle_proper_walk(g, c, u, v));
        if (expect) ASSERT_TRUE(walk);
      }
    }
  }
}

TEST(ProperPathTest, ColorConstrainedQueriesMatchOracle) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testing::random_connected(7, 0.35, rng);
    EdgeColoring c = testing::random_coloring_rng(g, 3, rng);
    Vertex u = trial % 7;
    Vertex v = (u + 3) % 7;
    std::uint64_t combos = testing::oracle_combos(g, c, u, v);
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= 3; ++b) {
        PathQuery q;
        q.source = u;
        q.target = v;
        q.start_mask = color_bit(a);
        q.end_mask = color_bit(b);
        bool expect = (combos >> ((a - 1) * 3 + (b - 1))) & 1;
        auto cert = proper_path_by_matching(g, c, q);
        ASSERT_EQ(cert.has_value(), expect);
        ASSERT_EQ(find_proper_path(g, c, q).has_value(), expect);
        if (cert) {
          ASSERT_TRUE(certificate_valid(g, c, *cert));
          ASSERT_EQ(cert->start_color, a);
          ASSERT_EQ(cert->end_color, b);
        }
      }
    }
  }
}

TEST(CertificateTest, RejectsBrokenPaths) {
  Graph g = named::cycle(5);
  EdgeColoring c(2, g.size());
  for (int i = 0; i < 5; ++i) c[*g.edge_id(i, (i + 1) % 5)] = 1 + i % 2;
  ProperPathCertificate ok = make_certificate(g, c, {0, 1, 2});
  EXPECT_TRUE(certificate_valid(g, c, ok));
  EXPECT_FALSE(certificate_valid(g, c, make_certificate(g, c, {0, 1, 0})));
  EXPECT_FALSE(certificate_valid(g, c, make_certificate(g, c, {0, 2})));
  EXPECT_FALSE(certificate_valid(g, c, make_certificate(g, c, {4, 0, 1})));
}

TEST(CheckTest, ProperConnectedMatchesOracleExhaustively) {
  for (int n = 3; n <= 6; ++n) {
    for_each_graph(n, {"-c"}, 0, 9, [](const Graph& g) {
      EdgeColoring c(2, g.size(), 1);
      for (std::uint32_t mask = 0; mask < (1U << g.size()); ++mask) {
        for (int id = 0; id < g.size(); ++id) c[id] = 1 + ((mask >> id) & 1);
        ConnectivityVerdict v = is_proper_connected(g, c);
        ASSERT_EQ(v.ok, testing::oracle_proper_connected(g, c));
        if (!v.ok) {
          auto [a, b] = *v.failing_pair;
          ASSERT_LT(a, b);
          ASSERT_FALSE(testing::oracle_proper_path(g, c, a, b));
        }
      }
    });
  }
}

TEST(CheckTest, StrongPropertyMatchesOracle) {
  std::mt19937_64 rng(3);
  int agree_true = 0;
  for (int trial = 0; trial < 600; ++trial) {
    Graph g = testing::random_connected(6 + trial % 3, 0.45, rng);
    EdgeColoring c = testing::random_coloring_rng(g, 2 + trial % 3, rng);
    StrongVerdict v = has_strong_property(g, c);
    bool expect = testing::oracle_strong(g, c);
    ASSERT_EQ(v.ok, expect);
    agree_true += expect;
    if (!v.ok) continue;
    for (const auto& [pair, w] : v.witnesses) {
      ASSERT_TRUE(certificate_valid(g, c, w.p1));
      ASSERT_TRUE(certificate_valid(g, c, w.p2));
      ASSERT_NE(w.p1.start_color, w.p2.start_color);
      ASSERT_NE(w.p1.end_color, w.p2.end_color);
    }
    ASSERT_EQ(v.witnesses.size(), static_cast<std::size_t>(g.order() * (g.order() - 1) / 2));
  }
  EXPECT_GT(agree_true, 10);
}

TEST(CheckTest, FocusedChecksAgreeWithFullChecks) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testing::random_connected(7, 0.4, rng);
    EdgeColoring c = testing::random_coloring_rng(g, 2, rng);
    std::vector<char> all(g.order(), 1);
    EXPECT_EQ(proper_on_pairs_touching(g, c, all), is_proper_connected(g, c).ok);
    EXPECT_EQ(strong_on_pairs_touching(g, c, all), has_strong_property(g, c, false).ok);
  }
}

TEST(CheckTest, RejectsDisconnectedGraphs) {
  Graph g(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(is_proper_connected(g, uniform_coloring(g, 2)), Error);
}

TEST(BlossomTest, MaximumMatchingOnOddCycles) {
  GeneralMatching m(5);
  for (int i = 0; i < 5; ++i) m.add_edge(i, (i + 1) % 5);
  std::vector<int> mate = m.solve();
  int matched = 0;
  for (int i = 0; i < 5; ++i) matched += mate[i] >= 0;
  EXPECT_EQ(matched, 4);
  GeneralMatching p(6);
  for (int i = 0; i < 6; ++i) p.add_edge(i, (i + 1) % 6);
  for (int x : p.solve(true)) EXPECT_GE(x, 0);
  EXPECT_TRUE(m.solve(true).empty());
}

int brute_matching(const Graph& g, int from, std::vector<char>& used) {
  int best = 0;
  for (int id = from; id < g.size(); ++id) {
    const Edge& e = g.edge(id);
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = 1;
    best = std::max(best, 1 + brute_matching(g, id + 1, used));
    used[e.u] = used[e.v] = 0;
  }
  return best;
}

TEST(BlossomTest, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = testing::random_connected(9, 0.25, rng);
    GeneralMatching m(g.order());
    for (const Edge& e : g.edges()) m.add_edge(e.u, e.v);
    std::vector<int> mate = m.solve();
    int matched = 0;
    for (int v = 0; v < g.order(); ++v) {
      if (mate[v] < 0) continue;
      ASSERT_EQ(mate[mate[v]], v);
      ASSERT_TRUE(g.adjacent(v, mate[v]));
      ++matched;
    }
    std::vector<char> used(g.order(), 0);
    ASSERT_EQ(matched / 2, brute_matching(g, 0, used));
  }
}

}  // namespace
}  // namespace pconn
