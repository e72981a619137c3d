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

#include "common/error.hpp"
#include "graph/named.hpp"
#include "proper/checks.hpp"
#include "solver/sampling.hpp"
#include "solver/search.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace pconn {
namespace {

using testing::for_each_graph;

TEST(ExactTest, NamedFamilies) {
  for (int n = 3; n <= 6; ++n) EXPECT_EQ(pc_exact(named::complete(n), 4).value, 1);
  for (int m = 2; m <= 5; ++m) EXPECT_EQ(pc_exact(named::star(m), 6).value, m);
  for (int n = 4; n <= 8; ++n) {
    PcResult r = pc_exact(named::cycle(n), 4);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.value, 2);
    ASSERT_TRUE(r.coloring.has_value());
    EXPECT_TRUE(is_proper_connected(named::cycle(n), *r.coloring).ok);
  }
  EXPECT_EQ(pc_exact(named::petersen(), 4).value, 2);
  EXPECT_EQ(pc_exact(named::path(6), 4).value, 2);
}

TEST(ExactTest, MatchesBruteForceOnSmallGraphs) {
  for (int n = 3; n <= 6; ++n) {
    for_each_graph(n, {"-c"}, 0, 8, [](const Graph& g) {
      int expect = testing::oracle_pc(g, 3);
      PcResult r = pc_exact(g, 3);
      if (expect == 0) {
        ASSERT_FALSE(r.exact);
        ASSERT_EQ(r.lower, 4);
        return;
      }
      ASSERT_TRUE(r.exact);
      ASSERT_EQ(r.value, expect);
      ASSERT_EQ(r.lower, expect);
      ASSERT_TRUE(testing::oracle_proper_connected(g, *r.coloring));
    });
  }
}

TEST(ExactTest, StrongValuesMatchBruteForce) {
  for_each_graph(6, {"-C"}, 0, 9, [](const Graph& g) {
    SearchOutcome two = exists_pc_coloring(g, 2, true);
    ASSERT_NE(two.status, SearchStatus::kInconclusive);
    bool expect = false;
    EdgeColoring c(2, g.size(), 1);
    for (std::uint32_t mask = 0; mask < (1U << g.size()) && !expect; ++mask) {
      for (int id = 0; id < g.size(); ++id) c[id] = 1 + ((mask >> id) & 1);
      expect = testing::oracle_strong(g, c);
    }
    ASSERT_EQ(two.status == SearchStatus::kFound, expect);
    if (two.coloring) ASSERT_TRUE(testing::oracle_strong(g, *two.coloring));
  });
}

TEST(ExactTest, BudgetExhaustionIsInconclusive) {
  SearchOptions opt;
  opt.budget_nodes = 1;
  PcResult r = pc_exact(named::petersen(), 3, opt);
  EXPECT_FALSE(r.exact);
  EXPECT_GE(r.lower, 1);
}

TEST(ExactTest, FixedPartialColoringIsRespected) {
  Graph g = named::cycle(6);
  EdgeColoring fixed(2, g.size(), 0);
  fixed[0] = 1;
  fixed[1] = 1;
  SearchOptions opt;
  opt.fixed = &fixed;
  opt.symmetry_reduction = false;
  SearchOutcome out = exists_pc_coloring(g, 2, opt);
  bool expect = false;
  EdgeColoring c = fixed;
  for (std::uint32_t mask = 0; mask < 16 && !expect; ++mask) {
    for (int id = 2; id < 6; ++id) c[id] = 1 + ((mask >> (id - 2)) & 1);
    expect = testing::oracle_proper_connected(g, c);
  }
  ASSERT_EQ(out.status == SearchStatus::kFound, expect);
  if (out.coloring) {
    EXPECT_EQ((*out.coloring)[0], 1);
    EXPECT_EQ((*out.coloring)[1], 1);
  }
}

TEST(ExactTest, RejectsDisconnectedInput) {
  EXPECT_THROW(pc_exact(Graph(4, {{0, 1}, {2, 3}}), 3), Error);
}

TEST(SamplingTest, DeterministicAcrossThreadCounts) {
  Graph g = named::cycle(9);
  SampleReport a = sample_refute(g, 2, 500, 42, 1);
  SampleReport b = sample_refute(g, 2, 500, 42, 3);
  EXPECT_EQ(a.successes, b.successes);
  ASSERT_EQ(a.failures.size(), b.failures.size());
  for (std::size_t i = 0; i < a.failures.size(); ++i) {
    EXPECT_EQ(a.failures[i].trial, b.failures[i].trial);
    EXPECT_EQ(a.failures[i].pair, b.failures[i].pair);
    EXPECT_FALSE(testing::oracle_proper_path(g, a.failures[i].coloring,
                                             a.failures[i].pair.first,
                                             a.failures[i].pair.second));
  }
  EXPECT_EQ(a.failures.size() + a.successes.size(), 500u);
  EXPECT_EQ(random_coloring(g, 2, 42, 7), random_coloring(g, 2, 42, 7));
}

TEST(SamplingTest, DifferentSeedsGiveDifferentColorings) {
  Graph g = named::petersen();
  EXPECT_NE(random_coloring(g, 3, 1, 0), random_coloring(g, 3, 2, 0));
  EXPECT_NE(random_coloring(g, 3, 1, 0), random_coloring(g, 3, 1, 1));
}

}  // namespace
}  // namespace pconn
