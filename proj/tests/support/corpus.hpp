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

#include <functional>
#include <string>
#include <vector>

#include "graph/graph.hpp"

namespace pconn::testing {

// Enumerates all graphs on n vertices up to isomorphism that satisfy the geng
// flags (for example "-c" connected, "-C" biconnected, "-d3" min degree 3).
// Not reentrant.
void for_each_graph(int n, const std::vector<std::string>& flags,
                    const std::function<void(const Graph&)>& visit);

// Same, restricted to graphs whose edge count lies in [min_edges, max_edges].
void for_each_graph(int n, const std::vector<std::string>& flags, int min_edges, int max_edges,
                    const std::function<void(const Graph&)>& visit);

}  // namespace pconn::testing
