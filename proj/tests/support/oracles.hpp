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

// Brute-force reference implementations used to cross-check the library.
// They share only the Graph container with the code under test.

#include <cstdint>
#include <random>
#include <vector>

#include "graph/graph.hpp"
#include "proper/coloring.hpp"

namespace pconn::testing {

// Set of (start color, end color) combinations over all simple proper u-v
// paths, as bit (a-1)*k + (b-1). Enumerates every simple path.
std::uint64_t oracle_combos(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v);

bool oracle_proper_path(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v);
bool oracle_proper_connected(const Graph& g, const EdgeColoring& c);

// Every pair has two proper paths whose start colors differ and whose end
// colors differ.
bool oracle_strong(const Graph& g, const EdgeColoring& c);

// Proper walk (vertices may repeat) via breadth-first search on
// (vertex, last color) states.
bool oracle_proper_walk(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v);

// Smallest k <= k_max admitting a proper-connected k-coloring, found by
// enumerating all k^m colorings; 0 when none exists up to k_max.
int oracle_pc(const Graph& g, int k_max);

bool oracle_connected(const Graph& g, const std::vector<char>& removed_vertex = {},
                      const std::vector<char>& removed_edge = {});
int oracle_connectivity(const Graph& g);
int oracle_edge_connectivity(const Graph& g);
int oracle_diameter(const Graph& g);
bool oracle_bipartite(const Graph& g);

// Random connected graph: a random spanning tree plus each other edge with
// probability p.
Graph random_connected(int n, double p, std::mt19937_64& rng);

// Random 2-connected noncomplete graph of diameter 3, by rejection.
Graph random_two_connected_diam3(int n, std::mt19937_64& rng);

EdgeColoring random_coloring_rng(const Graph& g, int k, std::mt19937_64& rng);

// Graph with vertices relabeled by a uniformly random permutation.
Graph shuffled(const Graph& g, std::mt19937_64& rng);

}  // namespace pconn::testing
