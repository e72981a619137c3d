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

#include <vector>

#include "graph/graph.hpp"

namespace pconn {

// Spanning bipartite subgraph made of the cross edges of a vertex
// bipartition. The bipartition is a maximum cut for n <= 16 and a locally
// maximal one otherwise. When the cross-edge graph is not 2-edge-connected,
// the side of a small edge cut is flipped as long as that enlarges the cut.
Graph max_cut_bipartite_subgraph(const Graph& g);

// Side per vertex of the cut used by max_cut_bipartite_subgraph.
std::vector<int> max_cut_sides(const Graph& g);

// A 2-edge-connected bipartite subgraph of a host graph, in host ids.
struct BipartiteSubgraph {
  std::vector<Vertex> vertices;  // ascending
  std::vector<int> edge_ids;     // host edge ids, ascending
  std::vector<int> side;         // per host vertex: 0, 1, or -1 outside
};

// Shortest even cycle of g (lexicographically smallest vertex set among the
// shortest), in cycle order starting at its smallest vertex. Empty if none.
std::vector<Vertex> shortest_even_cycle(const Graph& g);

// Grows the shortest even cycle by cross edges and side-consistent ears
// until neither applies. Throws Error(kPrecondition) "no seed cycle" when g
// has no even cycle.
BipartiteSubgraph maximal_2ec_bipartite_subgraph(const Graph& g);

// An ear of `h` in g: a path x..y with all inner vertices outside h, at least
// one inner vertex, whose length agrees with the sides of x and y (even when
// x == y). Empty if no such ear exists.
std::vector<Vertex> find_consistent_ear(const Graph& g, const BipartiteSubgraph& h);

}  // namespace pconn
