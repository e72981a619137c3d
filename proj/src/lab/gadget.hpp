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
#include <string>
#include <vector>

#include "graph/graph.hpp"
#include "proper/coloring.hpp"

namespace pconn {

enum class BlockKind { kK33, kMiniPath };
std::string block_kind_name(BlockKind kind);
BlockKind parse_block_kind(const std::string& name);  // "k33" or "mini"

// A block of a half: a bipartite piece entered at `entry` and left at `exit`.
struct BlockInfo {
  std::vector<Vertex> vertices;
  Vertex entry = -1;
  Vertex exit = -1;
};

// One half of a gadget pair: p - block1 -f- block2 -f'- block3 - p'.
struct HalfSpec {
  std::vector<Vertex> vertices;  // sorted
  std::array<BlockInfo, 3> blocks;
  Edge attach_in;   // p to the entry of block1
  Edge attach_out;  // exit of block3 to p'
  Edge f;           // block1 to block2
  Edge f_prime;     // block2 to block3
  int parity = 0;   // parity of the length of every p-p' path through the half
};

// Gadget pair between the connectors p and p'. Its two exits are the linking
// edges at p (near) and at p' (far).
struct GadgetPair {
  std::string name;  // "A", "B" or "C"
  Vertex p = -1;
  Vertex p_prime = -1;
  HalfSpec x;
  HalfSpec x_prime;
  Edge near_exit;
  Edge far_exit;

  // Vertices of both halves plus p and p', sorted.
  std::vector<Vertex> region() const;
};

// Connectors a=0, a'=1, b=2, b'=3, c=4, c'=5; linking edges ac', a'b, b'c.
// The far exit of each pair is the near exit of the next one (A, B, C, A).
struct GadgetSpec {
  BlockKind kind = BlockKind::kK33;
  int scale = 1;
  std::array<Vertex, 6> connectors{0, 1, 2, 3, 4, 5};
  std::array<Edge, 3> linking;
  std::array<GadgetPair, 3> pairs;
};

struct Counterexample {
  Graph graph;
  GadgetSpec spec;
};

// Builds the family member. K33 blocks are K_{s+2,s+2}; MiniPath blocks are
// single vertices (with one K2 block per odd half) at scale 1 and even cycles
// C_{2s} above. Throws Error(kPrecondition) for scale < 1.
Counterexample build_counterexample(BlockKind kind, int scale);

std::string gadget_spec_to_json(const GadgetSpec& spec);
// Throws Error(kParse) on malformed input.
GadgetSpec gadget_spec_from_json(const std::string& text);

struct StructurePredicate {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct StructureReport {
  bool ok = false;
  std::vector<StructurePredicate> predicates;
};

// Checks every GadgetSpec invariant against g: connectors and linking edges,
// attachments, exactly two cut edges {f, f'} per half, fixed and opposite
// p-p' path parities, kappa = 2 with {ac', a'b} an edge cut, noncompleteness
// and, for K33, minimum degree at least 3.
StructureReport verify_gadget_structure(const Graph& g, const GadgetSpec& spec);
std::string structure_report_to_json(const StructureReport& report);

enum class Escape { kNear, kFar, kNone };
std::string escape_name(Escape e);

struct OneWayVertex {
  Vertex vertex = -1;
  Escape exit = Escape::kNone;  // the only usable exit, kNone when stuck
};

// Whether v (in the region of `pair`) has a proper path to the outer end of
// the given exit whose first departure from the region is that exit.
bool can_escape(const Graph& g, const GadgetSpec& spec, int pair, const EdgeColoring& c,
                Vertex v, Escape exit);

// Smallest region vertex of the pair that escapes through at most one exit.
std::optional<OneWayVertex> find_one_way_vertex(const Graph& g, const GadgetSpec& spec, int pair,
                                                const EdgeColoring& c);

}  // namespace pconn
