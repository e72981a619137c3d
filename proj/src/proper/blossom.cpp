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

#include "proper/blossom.hpp"

#include <algorithm>

namespace pconn {

void GeneralMatching::add_edge(int a, int b) {
  adj_[a].push_back(b);
  adj_[b].push_back(a);
}

int GeneralMatching::lca(int a, int b) {
  std::vector<char> on_path(adj_.size(), 0);
  for (;;) {
    a = base_[a];
    on_path[a] = 1;
    if (match_[a] == -1) break;
    a = parent_[match_[a]];
  }
  for (;;) {
    b = base_[b];
    if (on_path[b]) return b;
    b = parent_[match_[b]];
  }
}

void GeneralMatching::mark_path(int v, int b, int child) {
  while (base_[v] != b) {
    blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
    parent_[v] = child;
    child = match_[v];
    v = parent_[match_[v]];
  }
}

int GeneralMatching::find_augmenting(int root) {
  int n = nodes();
  std::fill(used_.begin(), used_.end(), 0);
  std::fill(parent_.begin(), parent_.end(), -1);
  for (int i = 0; i < n; ++i) base_[i] = i;
  used_[root] = 1;
  queue_.assign(1, root);
  for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
    int v = queue_[qi];
    for (int to : adj_[v]) {
      if (base_[v] == base_[to] || match_[v] == to) continue;
      if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
        // Odd cycle: contract the blossom.
        int cur = lca(v, to);
        std::fill(blossom_.begin(), blossom_.end(), 0);
        mark_path(v, cur, to);
        mark_path(to, cur, v);
        for (int i = 0; i < n; ++i) {
          if (blossom_[base_[i]]) {
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = 1;
              queue_.push_back(i);
            }
          }
        }
      } else if (parent_[to] == -1) {
        parent_[to] = v;
        if (match_[to] == -1) return to;
        used_[match_[to]] = 1;
        queue_.push_back(match_[to]);
      }
    }
  }
  return -1;
}

std::vector<int> GeneralMatching::solve(bool perfect_only) {
  int n = nodes();
  match_.assign(n, -1);
  parent_.assign(n, -1);
  base_.assign(n, 0);
  used_.assign(n, 0);
  blossom_.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    if (match_[v] != -1) continue;
    for (int to : adj_[v]) {
      if (match_[to] == -1) {
        match_[to] = v;
        match_[v] = to;
        break;
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (match_[v] != -1) continue;
    int end = find_augmenting(v);
    if (end == -1 && perfect_only) return {};
    while (end != -1) {
      int pv = parent_[end];
      int ppv = match_[pv];
      match_[end] = pv;
      match_[pv] = end;
      end = ppv;
    }
  }
  return match_;
}

}  // namespace pconn
