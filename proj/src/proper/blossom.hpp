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

#include <vector>

namespace pconn {

// Maximum cardinality matching in a general graph (Edmonds' blossom
// algorithm, O(V^3)). Nodes are 0..nodes-1.
class GeneralMatching {
 public:
  explicit GeneralMatching(int nodes) : adj_(nodes) {}

  void add_edge(int a, int b);
  // Returns mate per node, -1 when unmatched. With perfect_only the search
  // stops at the first node that cannot be matched and returns an empty vector.
  std::vector<int> solve(bool perfect_only = false);
  int nodes() const { return static_cast<int>(adj_.size()); }

 private:
  int lca(int a, int b);
  void mark_path(int v, int b, int child);
  int find_augmenting(int root);

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_, blossom_;
  std::vector<int> queue_;
};

}  // namespace pconn
