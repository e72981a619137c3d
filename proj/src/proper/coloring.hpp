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
#include <string>
#include <string_view>
#include <vector>

#include "graph/graph.hpp"

namespace pconn {

inline constexpr int kMaxColors = 31;

// Colors 1..k per edge id; 0 marks an uncolored edge (partial colorings only).
struct EdgeColoring {
  int k = 0;
  std::vector<int> color;

  EdgeColoring() = default;
  EdgeColoring(int colors, int edges, int fill = 0) : k(colors), color(edges, fill) {}

  int operator[](int edge) const { return color[edge]; }
  int& operator[](int edge) { return color[edge]; }
  bool is_total() const;
  int colors_used() const;  // number of distinct colors present

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

// Throws Error(kInvalidColoring) unless c is a total coloring of g with
// colors in 1..c.k and c.k <= kMaxColors.
void validate_coloring(const Graph& g, const EdgeColoring& c);

// Every edge colored with `color`.
EdgeColoring uniform_coloring(const Graph& g, int k, int color = 1);

struct ProperPathCertificate {
  std::vector<Vertex> path;
  std::vector<int> colors;  // colors[i] is the color of path[i]path[i+1]
  int start_color = 0;
  int end_color = 0;
};

struct StrongWitness {
  ProperPathCertificate p1;
  ProperPathCertificate p2;
};

// Builds a certificate for a vertex sequence; no validity check.
ProperPathCertificate make_certificate(const Graph& g, const EdgeColoring& c,
                                       std::vector<Vertex> path);

// Re-walks the path: adjacency, distinct vertices, proper colors, recorded
// colors and start/end agree with c.
bool certificate_valid(const Graph& g, const EdgeColoring& c, const ProperPathCertificate& p);

// {"k": k, "edges": [[u, v, color], ...]} with edges in id order.
std::string coloring_to_json(const Graph& g, const EdgeColoring& c);
// Throws Error(kInvalidColoring) on unknown or repeated edges, missing edges
// or out-of-range colors, and Error(kParse) on malformed JSON.
EdgeColoring coloring_from_json(const Graph& g, std::string_view text);

}  // namespace pconn
