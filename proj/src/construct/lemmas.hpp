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

#include <optional>
#include <vector>

#include "graph/graph.hpp"
#include "proper/coloring.hpp"

namespace pconn {

// Chain decomposition (Schmidt) from a DFS rooted at vertex 0. Each chain is a
// vertex sequence; the first is a cycle, every later chain starts and ends on
// earlier chains. A connected graph is bridgeless iff the chains cover all
// edges, and 2-connected iff additionally only the first chain is a cycle.
std::vector<std::vector<Vertex>> chain_decomposition(const Graph& g);

// Colors g like c_h on the edges of h and with color 1 elsewhere. h must be a
// connected spanning subgraph of g on the same vertex ids. When `verify` is
// set the result must be proper connected on g, else Error(kInternal).
EdgeColoring lift_spanning_coloring(const Graph& g, const Graph& h, const EdgeColoring& c_h,
                                    bool verify = true);

// Strong proper-path 2-coloring of a connected bridgeless bipartite graph.
// Every chain is colored 1,2,1,... from its start; the result is verified
// and a search is used if the verification fails. Throws Error(kPrecondition)
// naming a bridge or an odd cycle.
EdgeColoring strong_2_coloring_bipartite(const Graph& h);

// g contains a vertex v whose incident edges are the new ones; c colors every
// other edge with colors 1..2 (edges at v are ignored). Returns c extended to
// the edges at v so that g is proper connected, or nothing when no choice of
// colors on those edges works with c frozen. Throws Error(kPrecondition) when
// v has fewer than two edges.
std::optional<EdgeColoring> extend_vertex_addition(const Graph& g, const EdgeColoring& c,
                                                   Vertex v);

// Strong proper-path coloring with at most 3 colors of a 2-connected graph.
// Prefers 2 colors when a small search finds them. Throws
// Error(kPrecondition) when g is not 2-connected.
EdgeColoring color_2connected_3(const Graph& g);

// Strong proper-path 2-coloring of a 3-edge-connected noncomplete graph via a
// 2-edge-connected bipartite spanning subgraph. Throws Error(kPrecondition)
// when g is complete or edge connectivity is below 3.
EdgeColoring color_3ec(const Graph& g);

}  // namespace pconn
