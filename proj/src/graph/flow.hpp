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

// Small integer-capacity flow network with BFS augmenting paths. Intended
// for unit or near-unit capacities where the flow value is tiny.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(nodes, -1) {}

  // Adds arc a->b with the given capacity (and its residual twin); returns the arc id.
  int add_arc(int a, int b, int capacity);

  void reserve_arcs(int arcs) { arcs_.reserve(2 * static_cast<std::size_t>(arcs)); }

  // Restores every arc to its initial capacity.
  void reset() {
    for (Arc& a : arcs_) a.cap = a.initial;
  }

  // Augments from s to t until no path remains or `limit` units were pushed.
  int max_flow(int s, int t, int limit);

  int flow_on(int arc) const { return arcs_[arc ^ 1].cap; }
  int arc_head(int arc) const { return arcs_[arc].to; }

  // Arcs leaving `node` (including residual twins).
  template <typename F>
  void for_each_arc(int node, F&& fn) const {
    for (int a = head_[node]; a != -1; a = arcs_[a].next) fn(a);
  }
  bool is_forward(int arc) const { return (arc & 1) == 0; }

 private:
  struct Arc {
    int to;
    int cap;
    int initial;
    int next;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> via_;
  std::vector<int> queue_;
};

}  // namespace pconn
