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

#include "proper/checks.hpp"

#include <string>

#include "common/error.hpp"
#include "graph/algorithms.hpp"
#include "proper/engine.hpp"

namespace pconn {

namespace {

constexpr int kMaxStrongColors = 8;

struct ScanOptions {
  bool strong = false;
  const std::vector<char>* focus = nullptr;
  bool collect = false;
};

struct ScanResult {
  bool ok = true;
  std::optional<VertexPair> failing;
  std::map<VertexPair, StrongWitness> witnesses;
};

// Combination (start a, end b) is bit (a-1)*k + (b-1).
int combo_bit(int a, int b, int k) { return (a - 1) * k + (b - 1); }

// Two combinations that differ in both start and end color, as bit indices.
std::optional<std::pair<int, int>> strong_pair(std::uint64_t combos, int k) {
  for (int i = 0; i < k * k; ++i) {
    if (!((combos >> i) & 1)) continue;
    for (int j = i + 1; j < k * k; ++j) {
      if (!((combos >> j) & 1)) continue;
      if (i / k != j / k && i % k != j % k) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

// Whether some two combinations differ in both start and end color: at least
// two start colors occur, and their end-color sets are not all one and the
// same single color.
bool has_strong_pair(std::uint64_t combos, int k) {
  std::uint64_t row_mask = (std::uint64_t{1} << k) - 1;
  std::uint64_t common = 0;
  int rows = 0;
  bool single_shared = true;
  for (int a = 0; a < k; ++a) {
    std::uint64_t row = (combos >> (a * k)) & row_mask;
    if (row == 0) continue;
    ++rows;
    if (row & (row - 1)) {
      single_shared = false;
    } else if (common == 0) {
      common = row;
    } else if (common != row) {
      single_shared = false;
    }
  }
  return rows >= 2 && !single_shared;
}

class PairScanner {
 public:
  PairScanner(const Graph& g, const EdgeColoring& c, const ScanOptions& opt)
      : g_(g), c_(c), opt_(opt), n_(g.order()), k_(c.k) {}

  ScanResult run() {
    ScanResult result;
    for (Vertex u = 0; u < n_; ++u) {
      if (!scan_source(u, result)) {
        result.ok = false;
        result.witnesses.clear();
        return result;
      }
    }
    return result;
  }

 private:
  bool needed(Vertex u, Vertex v) const {
    if (v <= u) return false;
    return !opt_.focus || (*opt_.focus)[u] || (*opt_.focus)[v];
  }

  bool satisfied(Vertex v) const { return done_[v]; }

  void record(Vertex v, int bit, const std::vector<Vertex>* path) {
    std::uint64_t b = std::uint64_t{1} << bit;
    if (combos_[v] & b) return;
    combos_[v] |= b;
    if (opt_.collect && path) paths_[{v, bit}] = *path;
    if (!done_[v] && (!opt_.strong || has_strong_pair(combos_[v], k_))) {
      done_[v] = 1;
      --remaining_;
    }
  }

  // Explores simple proper paths from u until every needed target is
  // satisfied or the step budget runs out. The budget is split evenly among
  // the edges at u so that every start color gets explored.
  void explore(Vertex u) {
    auto first = g_.incident(u);
    if (first.empty()) return;
    long share = (64L + 24L * g_.size()) / static_cast<long>(first.size()) + 1;
    std::vector<char>& on_path = on_path_;
    std::vector<Frame>& stack = stack_;
    std::vector<Vertex>& path = path_;
    on_path.assign(n_, 0);
    on_path[u] = 1;
    for (const Incidence& root : first) {
      if (remaining_ == 0) return;
      long budget = share;
      int start = c_[root.edge];
      path.assign({u, root.to});
      if (needed(u, root.to) && !satisfied(root.to))
        record(root.to, combo_bit(start, start, k_), &path);
      on_path[root.to] = 1;
      stack.assign(1, Frame{root.to, start, start, 0});
      while (!stack.empty() && remaining_ > 0 && budget > 0) {
        Frame& f = stack.back();
        auto row = g_.incident(f.v);
        if (f.next == static_cast<int>(row.size())) {
          on_path[f.v] = 0;
          stack.pop_back();
          path.pop_back();
          continue;
        }
        --budget;
        const Incidence& inc = row[f.next++];
        int col = c_[inc.edge];
        if (col == f.in_color || on_path[inc.to]) continue;
        path.push_back(inc.to);
        if (needed(u, inc.to) && !satisfied(inc.to))
          record(inc.to, combo_bit(start, col, k_), &path);
        on_path[inc.to] = 1;
        stack.push_back({inc.to, col, start, 0});
      }
      for (const Frame& f : stack) on_path[f.v] = 0;
    }
  }

  bool scan_source(Vertex u, ScanResult& result) {
    combos_.assign(n_, 0);
    done_.assign(n_, 0);
    paths_.clear();
    remaining_ = 0;
    for (Vertex v = u + 1; v < n_; ++v) remaining_ += needed(u, v);
    if (remaining_ == 0) return true;
    explore(u);
    if (remaining_ == 0 && !opt_.collect) return true;

    // Walk arrivals per start color, computed lazily.
    std::vector<std::vector<ColorMask>> arrivals(k_ + 1);
    auto arrival = [&](int start, Vertex v) {
      if (arrivals[start].empty()) {
        PathQuery q;
        q.source = u;
        q.start_mask = start == 0 ? kAnyColor : color_bit(start);
        arrivals[start] = proper_walk_arrivals(g_, c_, q);
      }
      return arrivals[start][v];
    };

    for (Vertex v = u + 1; v < n_; ++v) {
      if (!needed(u, v)) continue;
      if (!satisfied(v)) {
        if (!opt_.strong) {
          std::optional<ProperPathCertificate> cert;
          if (arrival(0, v) != 0) {
            PathQuery q;
            q.source = u;
            q.target = v;
            cert = proper_path_by_matching(g_, c_, q);
          }
          if (!cert) {
            result.failing = VertexPair{u, v};
            return false;
          }
          record(v, combo_bit(cert->start_color, cert->end_color, k_), &cert->path);
        } else {
          for (int a = 1; a <= k_ && !satisfied(v); ++a) {
            for (int b = 1; b <= k_ && !satisfied(v); ++b) {
              int bit = combo_bit(a, b, k_);
              if ((combos_[v] >> bit) & 1) continue;
              if (!(arrival(a, v) & color_bit(b))) continue;
              PathQuery q;
              q.source = u;
              q.target = v;
              q.start_mask = color_bit(a);
              q.end_mask = color_bit(b);
              if (auto cert = proper_path_by_matching(g_, c_, q)) record(v, bit, &cert->path);
            }
          }
          if (!satisfied(v)) {
            result.failing = VertexPair{u, v};
            return false;
          }
        }
      }
      if (opt_.collect && opt_.strong) {
        auto [i, j] = *strong_pair(combos_[v], k_);
        result.witnesses[{u, v}] = StrongWitness{make_certificate(g_, c_, paths_.at({v, i})),
                                                 make_certificate(g_, c_, paths_.at({v, j}))};
      }
    }
    return true;
  }

  const Graph& g_;
  const EdgeColoring& c_;
  ScanOptions opt_;
  int n_;
  int k_;
  struct Frame {
    Vertex v;
    int in_color;
    int start_color;
    int next;
  };

  std::vector<std::uint64_t> combos_;
  std::vector<char> done_;
  std::vector<char> on_path_;
  std::vector<Frame> stack_;
  std::vector<Vertex> path_;
  std::map<std::pair<Vertex, int>, std::vector<Vertex>> paths_;
  int remaining_ = 0;
};

void check_inputs(const Graph& g, const EdgeColoring& c, bool strong) {
  validate_coloring(g, c);
  require(is_connected(g), ErrorKind::kDisconnected, "graph is disconnected");
  if (strong) {
    if (c.k > kMaxStrongColors) {
      fail(ErrorKind::kPrecondition, "strong property check supports at most " +
                                     std::to_string(kMaxStrongColors) + " colors");
    }
  }
}

}  // namespace

ConnectivityVerdict is_proper_connected(const Graph& g, const EdgeColoring& c) {
  check_inputs(g, c, false);
  ScanOptions opt;
  ScanResult r = PairScanner(g, c, opt).run();
  return {r.ok, r.failing};
}

StrongVerdict has_strong_property(const Graph& g, const EdgeColoring& c, bool collect_witnesses) {
  check_inputs(g, c, true);
  ScanOptions opt;
  opt.strong = true;
  opt.collect = collect_witnesses;
  ScanResult r = PairScanner(g, c, opt).run();
  StrongVerdict out;
  out.ok = r.ok;
  out.failing_pair = r.failing;
  out.witnesses = std::move(r.witnesses);
  return out;
}

bool strong_on_pairs_touching(const Graph& g, const EdgeColoring& c,
                              const std::vector<char>& focus) {
  check_inputs(g, c, true);
  ScanOptions opt;
  opt.strong = true;
  opt.focus = &focus;
  return PairScanner(g, c, opt).run().ok;
}

bool proper_on_pairs_touching(const Graph& g, const EdgeColoring& c,
                              const std::vector<char>& focus) {
  check_inputs(g, c, false);
  ScanOptions opt;
  opt.focus = &focus;
  return PairScanner(g, c, opt).run().ok;
}

}  // namespace pconn
