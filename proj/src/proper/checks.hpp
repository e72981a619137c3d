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

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "graph/graph.hpp"
#include "proper/coloring.hpp"

namespace pconn {

using VertexPair = std::pair<Vertex, Vertex>;

struct ConnectivityVerdict {
  bool ok = false;
  std::optional<VertexPair> failing_pair;  // lexicographically first, u < v
};

// All pairs scanned in lexicographic order. Throws Error(kDisconnected) on a
// disconnected graph and Error(kInvalidColoring) on a partial coloring.
ConnectivityVerdict is_proper_connected(const Graph& g, const EdgeColoring& c);

struct StrongVerdict {
  bool ok = false;
  std::optional<VertexPair> failing_pair;  // first pair without a witness
  std::map<VertexPair, StrongWitness> witnesses;  // filled on success when requested
};

// Strong property: every pair u < v has two proper u-v paths differing in
// both start and end color.
StrongVerdict has_strong_property(const Graph& g, const EdgeColoring& c,
                                  bool collect_witnesses = true);

// Strong property restricted to pairs with at least one endpoint v where
// focus[v] != 0. Used to test a candidate coloring incrementally.
bool strong_on_pairs_touching(const Graph& g, const EdgeColoring& c,
                              const std::vector<char>& focus);

// Proper connectivity restricted to pairs touching `focus`.
bool proper_on_pairs_touching(const Graph& g, const EdgeColoring& c,
                              const std::vector<char>& focus);

}  // namespace pconn
