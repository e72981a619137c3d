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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graph/graph.hpp"

namespace pconn {

// Edge-list text: first line "n m", then m lines "u v" with 0-based ids.
// Blank lines and lines starting with '#' are ignored. Throws ParseError.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

// graph6 encoding of a single graph (no header, no trailing newline).
Graph parse_graph6(std::string_view line);
std::string format_graph6(const Graph& g);

// One graph6 string per non-empty line; an optional ">>graph6<<" header is skipped.
std::vector<Graph> parse_graph6_file(std::string_view text);

enum class GraphFormat { kAuto, kEdgeList, kGraph6 };

// kAuto picks the edge-list reader when the first meaningful line is "n m".
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::kAuto);

}  // namespace pconn
