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

#include <cstdint>
#include <optional>
#include <vector>

#include "graph/graph.hpp"
#include "proper/coloring.hpp"

namespace pconn {

// Bit c is set when color c may be used.
using ColorMask = std::uint32_t;
inline constexpr ColorMask kAnyColor = ~ColorMask{0};
inline constexpr ColorMask color_bit(int c) { return ColorMask{1} << c; }

// A single source-target query. Paths must start with a color in
// start_mask, end with a color in end_mask and, when `allowed` is set, use
// only vertices v with (*allowed)[v] != 0.
struct PathQuery {
  Vertex source = 0;
  Vertex target = 0;
  ColorMask start_mask = kAnyColor;
  ColorMask end_mask = kAnyColor;
  const std::vector<char>* allowed = nullptr;
};

// Reachability over (vertex, incoming color) states. A proper path implies a
// proper walk, so false proves that no proper path exists.
bool proper_walk_exists(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v);
bool proper_walk_exists(const Graph& g, const EdgeColoring& c, const PathQuery& q);

// Per target: bit c set when some proper walk from `source` ends at the
// target with an edge of color c. Respects start_mask and allowed of q;
// q.target and q.end_mask are ignored.
std::vector<ColorMask> proper_walk_arrivals(const Graph& g, const EdgeColoring& c,
                                            const PathQuery& q);

// Exact decision, with a certificate when a proper path exists. Runs the
// walk filter, then a short depth-first search, then the matching reduction.
std::optional<ProperPathCertificate> proper_path_exists(const Graph& g, const EdgeColoring& c,
                                                        Vertex u, Vertex v);
std::optional<ProperPathCertificate> find_proper_path(const Graph& g, const EdgeColoring& c,
                                                      const PathQuery& q);

// The matching reduction alone (no filter, no search); exposed for testing.
std::optional<ProperPathCertificate> proper_path_by_matching(const Graph& g,
                                                             const EdgeColoring& c,
                                                             const PathQuery& q);

}  // namespace pconn
