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
#include <vector>

#include "graph/graph.hpp"
#include "proper/checks.hpp"
#include "proper/coloring.hpp"

namespace pconn {

// Deterministic per-trial generator seed, independent of scheduling.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

// Uniform random k-coloring drawn from the trial's generator.
EdgeColoring random_coloring(const Graph& g, int k, std::uint64_t seed, std::uint64_t trial);

struct SampleFailure {
  std::uint64_t trial = 0;
  EdgeColoring coloring;
  VertexPair pair;
};

struct SampleReport {
  std::vector<SampleFailure> failures;  // sorted by trial
  // Trials whose coloring turned out proper connected. Each one is a
  // counterexample to the lower bound being probed.
  std::vector<std::uint64_t> successes;
};

// Samples `trials` random k-colorings. Every reported failing pair is
// re-checked with the exact matching decision; a disagreement throws
// Error(kInternal). The report does not depend on `jobs`.
SampleReport sample_refute(const Graph& g, int k, std::uint64_t trials, std::uint64_t seed,
                           int jobs = 1);

}  // namespace pconn
