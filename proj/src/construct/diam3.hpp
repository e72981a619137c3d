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
#include <vector>

#include "graph/bipartite.hpp"
#include "graph/graph.hpp"
#include "proper/coloring.hpp"

namespace pconn {

enum class Diam3Case { kThreeEC, kCase1Sub11, kCase1Sub12, kCase2OddCycle, kCase2Bipartite };
std::string diam3_case_name(Diam3Case c);

// Components of G - V(H) with two vertices, and their two attachments in H.
struct EdgeComponent {
  Vertex x = 0;  // adjacent to a
  Vertex y = 0;  // adjacent to b
  Vertex a = 0;
  Vertex b = 0;
};

// All edge components attached to the same pair {a, b}, a < b.
struct AttachmentClass {
  Vertex a = 0;
  Vertex b = 0;
  std::vector<int> members;  // indices into edge_components
};

struct Diam3Decomposition {
  Diam3Case tag = Diam3Case::kThreeEC;

  // Case 1: the cut S = {u1u2, v1v2} and the sets around it.
  Vertex u1 = -1, v1 = -1, u2 = -1, v2 = -1;
  std::vector<Vertex> h1, h2;
  std::vector<Vertex> q1, q2;
  std::vector<Vertex> q10, q11, q12, q20, q21, q22;
  std::vector<Edge> matching;  // maximum matching of E(Q11, Q12)

  // Case 2.
  std::vector<Vertex> odd_cycle;  // cycle order, Case2_OddCycle only
  BipartiteSubgraph h;
  std::vector<Vertex> singletons;  // the A_i
  std::vector<EdgeComponent> edge_components;  // the B_j
  std::vector<AttachmentClass> classes;  // the C(a, b)
};

// Throws Error(kPrecondition) unless g is 2-connected, noncomplete and of
// diameter 3. A structural fact that fails to hold raises Error(kInternal).
Diam3Decomposition classify_diam3(const Graph& g);

// Human-readable JSON object describing the decomposition.
std::string diam3_to_json(const Diam3Decomposition& d);

// Extends c0 (a proper-connecting 2-coloring of g[seed], given on host edge
// ids; other entries ignored) to all of g by repeatedly adding the smallest
// vertex with at least two neighbors in the current set. A failed local
// extension re-solves the current induced subgraph by search. Throws
// Error(kInternal) when the growth stalls or no 2-coloring is found.
EdgeColoring grow_by_degree2_additions(const Graph& g, const std::vector<Vertex>& seed,
                                       const EdgeColoring& c0);

struct Diam3Options {
  // On a failed verification, retry with the exact search instead of throwing.
  bool search_fallback = false;
};

struct Diam3Result {
  EdgeColoring coloring;
  Diam3Decomposition decomposition;
  int local_resolves = 0;  // grow steps that needed a search
  bool used_fallback = false;
};

// Proper-path 2-coloring of a 2-connected noncomplete diameter-3 graph,
// verified before it is returned. A failed verification is reported as
// Error(kInternal) naming the failing pair unless search_fallback is set.
Diam3Result color_diam3_detailed(const Graph& g, const Diam3Options& options = {});
EdgeColoring color_diam3(const Graph& g);

}  // namespace pconn
