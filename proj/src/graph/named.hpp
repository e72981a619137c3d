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

#include <string_view>

#include "graph/graph.hpp"

namespace pconn::named {

Graph complete(int n);
Graph cycle(int n);  // 0-1-...-(n-1)-0
Graph path(int n);   // n vertices, n-1 edges
Graph star(int leaves);  // center 0
Graph complete_bipartite(int a, int b);  // sides 0..a-1 and a..a+b-1
Graph petersen();
Graph hypercube(int dim);
Graph wheel(int rim);  // hub 0, rim 1..rim

// "K5", "C7", "P4", "S4" (star), "K3,3", "Q3", "W5" or "petersen".
// Throws Error(kParse) on anything else.
Graph by_name(std::string_view name);

}  // namespace pconn::named
