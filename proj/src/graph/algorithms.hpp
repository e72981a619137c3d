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

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "graph/graph.hpp"

namespace pconn {

// Bridges and articulation points, plus the connectivity numbers when
// computed by cut_structure(). kappa / kappa_prime are -1 when not computed.
struct CutStructure {
  std::vector<int> bridges;  // edge ids, ascending
  std::vector<Vertex> cut_vertices;  // ascending
  int kappa = -1;
  int kappa_prime = -1;
};

std::vector<int> bfs_distances(const Graph& g, Vertex source);  // -1 = unreachable
std::vector<int> component_labels(const Graph& g, int* count = nullptr);
bool is_connected(const Graph& g);

// Vertex connectivity; n-1 for K_n, 0 for disconnected or trivial graphs.
int connectivity(const Graph& g);

// Edge connectivity; 0 for disconnected or single-vertex graphs.
int edge_connectivity(const Graph& g);
// Same as edge_connectivity(g) >= k but stops pushing flow at k.
bool edge_connectivity_at_least(const Graph& g, int k);

// Exact bridge and articulation sets via DFS low-links.
CutStructure bridges_and_cut_vertices(const Graph& g);
// bridges_and_cut_vertices plus kappa and kappa_prime.
CutStructure cut_structure(const Graph& g);

bool is_two_connected(const Graph& g);       // connected, n >= 3, no cut vertex
bool is_two_edge_connected(const Graph& g);  // connected, n >= 2, no bridge

// Side assignment per connected component; absent if there is an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

// Vertices of some odd cycle in cycle order, empty if the graph is bipartite.
std::vector<Vertex> find_odd_cycle(const Graph& g);

// Largest BFS distance. Throws Error(kDisconnected) when the graph is disconnected.
int diameter(const Graph& g);

// Two paths from v to distinct vertices of `target`, sharing only v, whose
// internal vertices avoid `target`. Throws Error(kPrecondition) when g is not
// 2-connected, v is in target or |target| < 2.
std::array<std::vector<Vertex>, 2> two_fan(const Graph& g, Vertex v,
                                           std::span<const Vertex> target);

// Maximum matching among the edges of g joining x to y (x, y disjoint).
// Deterministic: x scanned ascending, neighbors ascending.
std::vector<Edge> maximum_matching(std::span<const Vertex> x, std::span<const Vertex> y,
                                   const Graph& g);

}  // namespace pconn
