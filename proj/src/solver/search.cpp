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

#include "solver/search.hpp"

#include <algorithm>
#include <chrono>

#include "common/error.hpp"
#include "graph/algorithms.hpp"
#include "proper/checks.hpp"

namespace pconn {

namespace {

constexpr int kDead = -1;
constexpr long kWitnessSearchCap = 4096;

// Edges in BFS discovery order from vertex 0.
std::vector<int> bfs_edge_order(const Graph& g) {
  std::vector<int> order;
  std::vector<char> listed(g.size(), 0);
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> queue{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const Incidence& inc : g.incident(queue[i])) {
      if (!listed[inc.edge]) {
        listed[inc.edge] = 1;
        order.push_back(inc.edge);
      }
      if (!seen[inc.to]) {
        seen[inc.to] = 1;
        queue.push_back(inc.to);
      }
    }
  }
  return order;
}

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int k, const SearchOptions& opt)
      : g_(g), k_(k), opt_(opt), color_(g.size(), 0), users_(g.size()) {
    words_ = (g.size() + 63) / 64;
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v)
        if (!g.adjacent(u, v)) pairs_.emplace_back(u, v);
    witness_.resize(pairs_.size());
    mask_.assign(pairs_.size() * words_, 0);
    unknown_.assign(pairs_.size(), 0);
    if (opt_.fixed) {
      require(static_cast<int>(opt_.fixed->color.size()) == g.size(),
              ErrorKind::kInvalidColoring, "fixed coloring does not match the graph");
      for (int id = 0; id < g.size(); ++id) {
        int x = opt_.fixed->color[id];
        require(x >= 0 && x <= k, ErrorKind::kInvalidColoring, "fixed color out of range");
        color_[id] = x;
      }
    }
    for (int id : bfs_edge_order(g))
      if (color_[id] == 0) order_.push_back(id);
    symmetry_ = opt_.symmetry_reduction && !opt_.fixed;
  }

  SearchOutcome run() {
    SearchOutcome out;
    bool consistent = true;
    for (int p = 0; p < static_cast<int>(pairs_.size()) && consistent; ++p)
      consistent = refresh(p);
    if (consistent && descend(0)) {
      out.status = SearchStatus::kFound;
      out.coloring = EdgeColoring{k_, 0};
      out.coloring->color = color_;
    } else {
      out.status = exhausted_budget_ ? SearchStatus::kInconclusive : SearchStatus::kAbsent;
    }
    out.nodes = nodes_;
    return out;
  }

 private:
  // Color of the last edge after traversing an edge of color col (0 = free).
  int step(int last, int col) const {
    if (col > 0) return last == col ? kDead : col;
    if (k_ == 1) return last == 0 ? 1 : kDead;
    if (k_ == 2) return last == 0 ? 0 : 3 - last;
    return 0;
  }

  bool witness_ok(int p) const {
    if (unknown_[p]) return false;
    int last = 0;
    for (int id : witness_[p]) {
      last = step(last, color_[id]);
      if (last == kDead) return false;
    }
    return true;
  }

  enum class Probe { kFound, kNone, kCapped };

  // Depth-first search for a simple path that some completion makes proper.
  Probe find_witness(int p, std::vector<int>& edges) {
    auto [s, t] = pairs_[p];
    struct Frame {
      Vertex v;
      int last;
      int next;
      int via;
    };
    std::vector<char> on_path(g_.order(), 0);
    std::vector<Frame> stack{{s, 0, 0, -1}};
    on_path[s] = 1;
    long budget = kWitnessSearchCap;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto row = g_.incident(f.v);
      if (f.next == static_cast<int>(row.size())) {
        on_path[f.v] = 0;
        stack.pop_back();
        continue;
      }
      if (--budget < 0) return Probe::kCapped;
      const Incidence& inc = row[f.next++];
      if (on_path[inc.to]) continue;
      int last = step(f.last, color_[inc.edge]);
      if (last == kDead) continue;
      if (inc.to == t) {
        edges.clear();
        for (std::size_t i = 1; i < stack.size(); ++i) edges.push_back(stack[i].via);
        edges.push_back(inc.edge);
        return Probe::kFound;
      }
      on_path[inc.to] = 1;
      stack.push_back({inc.to, last, 0, inc.edge});
    }
    return Probe::kNone;
  }

  // Relaxed walk reachability with the same wildcard semantics.
  bool walk_reachable(int p) const {
    auto [s, t] = pairs_[p];
    int width = k_ + 1;
    std::vector<char> seen(static_cast<std::size_t>(g_.order()) * width, 0);
    std::vector<std::pair<Vertex, int>> queue{{s, 0}};
    seen[static_cast<std::size_t>(s) * width] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      auto [v, last] = queue[i];
      for (const Incidence& inc : g_.incident(v)) {
        int next = step(last, color_[inc.edge]);
        if (next == kDead) continue;
        if (inc.to == t) return true;
        char& mark = seen[static_cast<std::size_t>(inc.to) * width + next];
        if (!mark) {
          mark = 1;
          queue.emplace_back(inc.to, next);
        }
      }
    }
    return false;
  }

  void set_witness(int p, std::vector<int> edges, bool unknown) {
    trail_.push_back({p, std::move(witness_[p]), unknown_[p]});
    unknown_count_ += static_cast<int>(unknown) - unknown_[p];
    witness_[p] = std::move(edges);
    unknown_[p] = unknown;
    rebuild_mask(p);
    for (int id : witness_[p]) {
      user_trail_.emplace_back(id, users_[id].size());
      users_[id].push_back(p);
    }
  }

  void rebuild_mask(int p) {
    std::uint64_t* m = &mask_[static_cast<std::size_t>(p) * words_];
    std::fill(m, m + words_, 0);
    for (int id : witness_[p]) m[id >> 6] |= std::uint64_t{1} << (id & 63);
  }

  bool uses(int p, int id) const {
    return (mask_[static_cast<std::size_t>(p) * words_ + (id >> 6)] >> (id & 63)) & 1U;
  }

  // Ensures pair p has a witness; false when none can exist.
  bool refresh(int p) {
    std::vector<int> edges;
    switch (find_witness(p, edges)) {
      case Probe::kFound:
        set_witness(p, std::move(edges), false);
        return true;
      case Probe::kNone:
        return false;
      case Probe::kCapped:
        if (!walk_reachable(p)) return false;
        if (!unknown_[p]) set_witness(p, {}, true);
        return true;
    }
    return true;
  }

  bool propagate(int id) {
    std::size_t count = users_[id].size();
    for (std::size_t i = 0; i < count; ++i) {
      int p = users_[id][i];
      if (!uses(p, id) || witness_ok(p)) continue;
      if (!refresh(p)) return false;
    }
    for (int p = 0; unknown_count_ > 0 && p < static_cast<int>(pairs_.size()); ++p) {
      if (unknown_[p] && !refresh(p)) return false;
    }
    return true;
  }

  void undo(std::size_t trail_mark, std::size_t user_mark) {
    while (trail_.size() > trail_mark) {
      Change& ch = trail_.back();
      witness_[ch.pair] = std::move(ch.old_edges);
      unknown_count_ += ch.old_unknown - unknown_[ch.pair];
      unknown_[ch.pair] = ch.old_unknown;
      rebuild_mask(ch.pair);
      trail_.pop_back();
    }
    while (user_trail_.size() > user_mark) {
      auto [id, size] = user_trail_.back();
      users_[id].resize(size);
      user_trail_.pop_back();
    }
  }

  bool leaf_ok() {
    EdgeColoring c{k_, 0};
    c.color = color_;
    if (opt_.require_strong) return has_strong_property(g_, c, false).ok;
    return is_proper_connected(g_, c).ok;
  }

  bool descend(std::size_t depth) {
    if (depth == order_.size()) {
      if (++nodes_ > opt_.budget_nodes) {
        exhausted_budget_ = true;
        return false;
      }
      return leaf_ok();
    }
    int id = order_[depth];
    int limit = symmetry_ ? std::min(k_, max_color_ + 1) : k_;
    for (int col = 1; col <= limit; ++col) {
      if (++nodes_ > opt_.budget_nodes) {
        exhausted_budget_ = true;
        return false;
      }
      std::size_t trail_mark = trail_.size();
      std::size_t user_mark = user_trail_.size();
      int saved_max = max_color_;
      color_[id] = col;
      max_color_ = std::max(max_color_, col);
      if (propagate(id) && descend(depth + 1)) return true;
      color_[id] = 0;
      max_color_ = saved_max;
      undo(trail_mark, user_mark);
      if (exhausted_budget_) return false;
    }
    return false;
  }

  struct Change {
    int pair;
    std::vector<int> old_edges;
    char old_unknown;
  };

  const Graph& g_;
  int k_;
  SearchOptions opt_;
  bool symmetry_ = true;
  std::vector<int> color_;
  std::vector<int> order_;
  std::vector<VertexPair> pairs_;
  std::vector<std::vector<int>> witness_;
  std::vector<std::uint64_t> mask_;
  std::vector<char> unknown_;
  int words_ = 1;
  std::vector<std::vector<int>> users_;
  std::vector<Change> trail_;
  std::vector<std::pair<int, std::size_t>> user_trail_;
  int unknown_count_ = 0;
  int max_color_ = 0;
  std::int64_t nodes_ = 0;
  bool exhausted_budget_ = false;
};

}  // namespace

SearchOutcome exists_pc_coloring(const Graph& g, int k, bool require_strong) {
  SearchOptions opt;
  opt.require_strong = require_strong;
  return exists_pc_coloring(g, k, opt);
}

SearchOutcome exists_pc_coloring(const Graph& g, int k, const SearchOptions& options) {
  if (!(k >= 1 && k <= kMaxColors)) {
    fail(ErrorKind::kPrecondition, "k must be in 1.." + std::to_string(kMaxColors));
  }
  require(g.order() >= 2, ErrorKind::kPrecondition, "graph needs at least two vertices");
  require(is_connected(g), ErrorKind::kDisconnected, "graph is disconnected");
  SearchOutcome out = ColoringSearch(g, k, options).run();
  if (out.coloring) {
    // Never hand out an unverified coloring.
    bool ok = options.require_strong ? has_strong_property(g, *out.coloring, false).ok
                                     : is_proper_connected(g, *out.coloring).ok;
    require(ok, ErrorKind::kInternal, "search produced a coloring that fails verification");
  }
  return out;
}

std::string evidence_name(Evidence e) {
  switch (e) {
    case Evidence::kExhaustive:
      return "exhaustive";
    case Evidence::kSampledRefutation:
      return "sampled-refutation";
    case Evidence::kConstructiveUpper:
      return "constructive-upper";
  }
  return "unknown";
}

PcResult pc_exact(const Graph& g, int k_max, const SearchOptions& options) {
  require(g.order() >= 2, ErrorKind::kPrecondition, "graph needs at least two vertices");
  require(is_connected(g), ErrorKind::kDisconnected, "graph is disconnected");
  require(k_max >= 1, ErrorKind::kPrecondition, "k_max must be positive");
  k_max = std::min(k_max, kMaxColors);
  auto started = std::chrono::steady_clock::now();
  PcResult r;
  bool all_absent = true;
  for (int k = 1; k <= k_max; ++k) {
    SearchOutcome o = exists_pc_coloring(g, k, options);
    r.nodes += o.nodes;
    if (o.status == SearchStatus::kFound) {
      r.coloring = std::move(o.coloring);
      r.upper = k;
      r.value = k;
      r.exact = all_absent;
      r.evidence = all_absent ? Evidence::kExhaustive : Evidence::kConstructiveUpper;
      break;
    }
    if (o.status == SearchStatus::kAbsent && all_absent) r.lower = k + 1;
    if (o.status == SearchStatus::kInconclusive) all_absent = false;
  }
  if (!r.coloring) r.evidence = Evidence::kExhaustive;
  r.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
          .count();
  return r;
}

}  // namespace pconn
