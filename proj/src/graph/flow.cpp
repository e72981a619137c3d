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

#include "graph/flow.hpp"

#include <algorithm>

namespace pconn {

int FlowNetwork::add_arc(int a, int b, int capacity) {
  int id = static_cast<int>(arcs_.size());
  arcs_.push_back({b, capacity, capacity, head_[a]});
  head_[a] = id;
  arcs_.push_back({a, 0, 0, head_[b]});
  head_[b] = id + 1;
  return id;
}

int FlowNetwork::max_flow(int s, int t, int limit) {
  int total = 0;
  std::vector<int>& via = via_;
  std::vector<int>& queue = queue_;
  via.resize(head_.size());
  queue.reserve(head_.size());
  while (total < limit) {
    std::fill(via.begin(), via.end(), -1);
    via[s] = -2;
    queue.clear();
    queue.push_back(s);
    for (std::size_t qi = 0; qi < queue.size() && via[t] == -1; ++qi) {
      int x = queue[qi];
      for (int a = head_[x]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && via[arcs_[a].to] == -1) {
          via[arcs_[a].to] = a;
          queue.push_back(arcs_[a].to);
        }
      }
    }
    if (via[t] == -1) break;
    int push = limit - total;
    for (int x = t; x != s; x = arcs_[via[x] ^ 1].to) push = std::min(push, arcs_[via[x]].cap);
    for (int x = t; x != s; x = arcs_[via[x] ^ 1].to) {
      arcs_[via[x]].cap -= push;
      arcs_[via[x] ^ 1].cap += push;
    }
    total += push;
  }
  return total;
}

}  // namespace pconn
