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
#include <string>

#include "graph/graph.hpp"
#include "proper/coloring.hpp"

namespace pconn {

inline constexpr std::int64_t kDefaultBudgetNodes = std::int64_t{1} << 26;

struct SearchOptions {
  bool require_strong = false;
  // Fix the first edge to color 1 and introduce colors in increasing order.
  // Ignored when `fixed` is given.
  bool symmetry_reduction = true;
  std::int64_t budget_nodes = kDefaultBudgetNodes;
  // Optional partial coloring (0 = free) that every solution must extend.
  const EdgeColoring* fixed = nullptr;
};

enum class SearchStatus { kFound, kAbsent, kInconclusive };

struct SearchOutcome {
  SearchStatus status = SearchStatus::kInconclusive;
  std::optional<EdgeColoring> coloring;  // verified, set when kFound
  std::int64_t nodes = 0;
};

// Backtracking over k-colorings with path-witness pruning. kAbsent is a proof
// by exhaustion; kInconclusive means the node budget ran out.
SearchOutcome exists_pc_coloring(const Graph& g, int k, bool require_strong);
SearchOutcome exists_pc_coloring(const Graph& g, int k, const SearchOptions& options);

enum class Evidence { kExhaustive, kSampledRefutation, kConstructiveUpper };
std::string evidence_name(Evidence e);

struct PcResult {
  int value = 0;        // pc(G) when exact, otherwise the best upper bound (0 if none)
  bool exact = false;
  int lower = 1;        // proven lower bound
  int upper = 0;        // upper bound witnessed by `coloring`, 0 if none
  std::optional<EdgeColoring> coloring;
  Evidence evidence = Evidence::kExhaustive;
  std::int64_t nodes = 0;
  double runtime_ms = 0;
};

// Smallest k <= k_max admitting a (strong, if requested) proper-path
// coloring. When the budget runs out at some k the result carries bounds.
// Throws Error(kDisconnected) for disconnected graphs.
PcResult pc_exact(const Graph& g, int k_max, const SearchOptions& options = {});

}  // namespace pconn
