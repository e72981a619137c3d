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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lab/gadget.hpp"
#include "proper/checks.hpp"

namespace pconn {

enum class RefutationRoute { kDirect, kStructural };
std::string route_name(RefutationRoute r);

// A pair of vertices with no proper path under the refuted coloring.
struct RefutationWitness {
  RefutationRoute route = RefutationRoute::kDirect;
  VertexPair pair{-1, -1};
  // Structural route: the one-way vertex found in each gadget pair, and the
  // two gadget pairs whose vertices escape in the same direction (or the pair
  // holding a stuck vertex twice).
  std::array<std::optional<OneWayVertex>, 3> one_way;
  std::pair<int, int> gadgets{-1, -1};
};

struct RefuteOptions {
  // Try the one-way vertex argument before the full connectivity scan.
  bool structural_first = false;
};

// Finds a pair that c fails to connect. The direct route scans all pairs; the
// structural route picks one-way vertices and applies the pigeonhole over the
// three gadget pairs. Every returned pair is re-verified with the matching
// reduction (Error(kInternal) if a path turns up). Returns nothing only when
// c is proper connected, which contradicts pc = 3 for the family.
std::optional<RefutationWitness> refute_2_coloring(const Graph& g, const GadgetSpec& spec,
                                                   const EdgeColoring& c,
                                                   const RefuteOptions& options = {});

std::string witness_to_json(const RefutationWitness& w);

struct TrialOutcome {
  std::uint64_t trial = 0;
  std::optional<RefutationWitness> witness;
};

struct RefuteSummary {
  std::uint64_t trials = 0;
  std::uint64_t defeated = 0;
  std::uint64_t direct = 0;
  std::uint64_t structural = 0;
  std::vector<std::uint64_t> undefeated;  // trial indices, ascending
  std::vector<TrialOutcome> outcomes;     // ordered by trial
};

// Refutes random_coloring(g, 2, seed, t) for t = 0..trials-1 on `jobs`
// threads. The result does not depend on the number of jobs.
RefuteSummary refute_trials(const Graph& g, const GadgetSpec& spec, std::uint64_t trials,
                            std::uint64_t seed, int jobs = 1, const RefuteOptions& options = {});

}  // namespace pconn
