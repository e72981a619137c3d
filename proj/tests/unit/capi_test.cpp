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

#include <string>

#include <json.hpp>

#include "pconn/pconn.h"

namespace {

using nlohmann::json;

json take_json(char* s) {
  json j = json::parse(s);
  pc_string_free(s);
  return j;
}

TEST(CApiTest, ParseErrorsReportLines) {
  pc_graph* g = nullptr;
  EXPECT_EQ(pc_graph_parse("3 2\n0 1\n0 7\n", PC_FORMAT_AUTO, &g), PC_INPUT_ERROR);
  EXPECT_EQ(g, nullptr);
  EXPECT_EQ(pc_last_error_line(), 3);
  EXPECT_NE(std::string(pc_last_error()).find("out of range"), std::string::npos);
  EXPECT_EQ(pc_graph_parse(nullptr, PC_FORMAT_AUTO, &g), PC_INPUT_ERROR);
  ASSERT_EQ(pc_graph_parse("3 2\n0 1\n1 2\n", PC_FORMAT_AUTO, &g), PC_OK);
  EXPECT_EQ(pc_last_error_line(), 0);
  EXPECT_EQ(pc_graph_order(g), 3);
  EXPECT_EQ(pc_graph_size(g), 2);
  pc_graph_free(g);
}

TEST(CApiTest, FromEdgesAndFormat) {
  int edges[] = {0, 1, 1, 2, 2, 3, 3, 0};
  pc_graph* g = nullptr;
  ASSERT_EQ(pc_graph_from_edges(4, edges, 4, &g), PC_OK);
  char* text = nullptr;
  ASSERT_EQ(pc_graph_format(g, PC_FORMAT_GRAPH6, &text), PC_OK);
  pc_graph* back = nullptr;
  ASSERT_EQ(pc_graph_parse(text, PC_FORMAT_GRAPH6, &back), PC_OK);
  EXPECT_EQ(pc_graph_size(back), 4);
  pc_string_free(text);
  pc_graph_free(back);
  int loop[] = {1, 1};
  pc_graph* bad = nullptr;
  EXPECT_EQ(pc_graph_from_edges(3, loop, 1, &bad), PC_INPUT_ERROR);
  pc_graph_free(g);
}

TEST(CApiTest, ExactAndVerify) {
  pc_graph* g = nullptr;
  ASSERT_EQ(pc_graph_named("C7", &g), PC_OK);
  char* out = nullptr;
  pc_coloring* c = nullptr;
  ASSERT_EQ(pc_exact(g, 4, 0, 0, &out, &c), PC_OK);
  json j = take_json(out);
  EXPECT_EQ(j["value"], 2);
  EXPECT_EQ(j["evidence"], "exhaustive");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(pc_coloring_colors(c), 2);
  ASSERT_EQ(pc_verify(g, c, 0, &out), PC_OK);
  EXPECT_TRUE(take_json(out)["proper_connected"].get<bool>());
  pc_coloring_free(c);

  pc_coloring* mono = nullptr;
  ASSERT_EQ(pc_coloring_parse(g,
                              "{\"k\":1,\"edges\":[[0,1,1],[1,2,1],[2,3,1],[3,4,1],[4,5,1],"
                              "[5,6,1],[0,6,1]]}",
                              &mono),
            PC_OK);
  ASSERT_EQ(pc_verify(g, mono, 0, &out), PC_PROPERTY_FAILED);
  json fail = take_json(out);
  EXPECT_FALSE(fail["proper_connected"].get<bool>());
  EXPECT_EQ(fail["failing_pair"], json::array({0, 2}));
  pc_coloring_free(mono);
  pc_graph_free(g);
}

TEST(CApiTest, BudgetExhaustionIsInconclusive) {
  pc_graph* g = nullptr;
  ASSERT_EQ(pc_graph_named("petersen", &g), PC_OK);
  char* out = nullptr;
  EXPECT_EQ(pc_exact(g, 3, 0, 1, &out, nullptr), PC_INCONCLUSIVE);
  pc_string_free(out);
  pc_graph_free(g);
}

TEST(CApiTest, ColorMethodsAndPreconditions) {
  pc_graph* pet = nullptr;
  ASSERT_EQ(pc_graph_named("petersen", &pet), PC_OK);
  char* out = nullptr;
  pc_coloring* c = nullptr;
  ASSERT_EQ(pc_color(pet, "3ec", 0, &out, &c), PC_OK);
  EXPECT_EQ(take_json(out)["evidence"], "constructive_upper");
  ASSERT_EQ(pc_verify(pet, c, 1, &out), PC_OK);
  pc_string_free(out);
  pc_coloring_free(c);
  EXPECT_EQ(pc_color(pet, "diam3", 0, &out, nullptr), PC_INPUT_ERROR);
  EXPECT_NE(std::string(pc_last_error()).find("diameter"), std::string::npos);
  EXPECT_EQ(pc_color(pet, "bipartite", 0, &out, nullptr), PC_INPUT_ERROR);
  EXPECT_EQ(pc_color(pet, "magic", 0, &out, nullptr), PC_INPUT_ERROR);
  pc_graph_free(pet);

  pc_graph* c7 = nullptr;
  ASSERT_EQ(pc_graph_named("C7", &c7), PC_OK);
  ASSERT_EQ(pc_color(c7, "diam3", 1, &out, nullptr), PC_OK);
  json j = take_json(out);
  EXPECT_EQ(j["decomposition"]["case"], "Case2_OddCycle");
  pc_graph_free(c7);
}

TEST(CApiTest, CounterexampleRoundTrip) {
  pc_graph* g = nullptr;
  pc_gadget* spec = nullptr;
  ASSERT_EQ(pc_gen_counterexample("mini", 1, &g, &spec), PC_OK);
  EXPECT_EQ(pc_graph_order(g), 27);
  char* text = nullptr;
  ASSERT_EQ(pc_gadget_to_json(spec, &text), PC_OK);
  pc_gadget* back = nullptr;
  ASSERT_EQ(pc_gadget_parse(text, &back), PC_OK);
  pc_string_free(text);
  char* out = nullptr;
  ASSERT_EQ(pc_verify_gadget(g, back, &out), PC_OK);
  EXPECT_TRUE(take_json(out)["ok"].get<bool>());
  ASSERT_EQ(pc_refute(g, back, 100, 7, 1, &out), PC_OK);
  json r = take_json(out);
  EXPECT_EQ(r["defeated"], 100);
  pc_graph* g2 = nullptr;
  pc_gadget* spec2 = nullptr;
  EXPECT_EQ(pc_gen_counterexample("k44", 1, &g2, &spec2), PC_INPUT_ERROR);
  EXPECT_EQ(g2, nullptr);
  pc_gadget_free(back);
  pc_gadget_free(spec);
  pc_graph_free(g);
}

TEST(CApiTest, NullHandlesAreRejected) {
  char* out = nullptr;
  EXPECT_EQ(pc_verify(nullptr, nullptr, 0, &out), PC_INPUT_ERROR);
  EXPECT_EQ(pc_graph_order(nullptr), 0);
  pc_graph_free(nullptr);
  pc_string_free(nullptr);
  EXPECT_STRNE(pc_version(), "");
}

}  // namespace
