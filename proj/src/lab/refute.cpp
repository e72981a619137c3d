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

#include "lab/refute.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include <json.hpp>

#include "common/error.hpp"
#include "proper/engine.hpp"
#include "solver/sampling.hpp"

namespace pconn {

namespace {

VertexPair ordered(Vertex u, Vertex v) { return u < v ? VertexPair{u, v} : VertexPair{v, u}; }

void confirm_no_path(const Graph& g, const EdgeColoring& c, const VertexPair& p) {
  PathQuery q;
  q.source = p.first;
  q.target = p.second;
  if (proper_path_by_matching(g, c, q)) {
    fail(ErrorKind::kInternal, "refutation pair " + std::to_string(p.first) + "," +
                                   std::to_string(p.second) + " has a proper path");
  }
}

std::optional<RefutationWitness> structural(const Graph& g, const GadgetSpec& spec,
                                            const EdgeColoring& c) {
  RefutationWitness w;
  w.route = RefutationRoute::kStructural;
  for (int i = 0; i < 3; ++i) {
    w.one_way[i] = find_one_way_vertex(g, spec, i, c);
    if (!w.one_way[i]) continue;
    if (w.one_way[i]->exit == Escape::kNone) {
      // A stuck vertex cannot reach anything outside its region.
      std::vector<Vertex> region = spec.pairs[i].region();
      Vertex outside = 0;
      while (std::binary_search(region.begin(), region.end(), outside)) ++outside;
      w.pair = ordered(w.one_way[i]->vertex, outside);
      w.gadgets = {i, i};
      return w;
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (w.one_way[i] && w.one_way[j] && w.one_way[i]->exit == w.one_way[j]->exit) {
        w.pair = ordered(w.one_way[i]->vertex, w.one_way[j]->vertex);
        w.gadgets = {i, j};
        return w;
      }
    }
  }
  return std::nullopt;
}

std::optional<RefutationWitness> direct(const Graph& g, const EdgeColoring& c) {
  ConnectivityVerdict v = is_proper_connected(g, c);
  if (v.ok) return std::nullopt;
  RefutationWitness w;
  w.route = RefutationRoute::kDirect;
  w.pair = *v.failing_pair;
  return w;
}

}  // namespace

std::string route_name(RefutationRoute r) {
  return r == RefutationRoute::kDirect ? "direct" : "structural";
}

std::optional<RefutationWitness> refute_2_coloring(const Graph& g, const GadgetSpec& spec,
                                                   const EdgeColoring& c,
                                                   const RefuteOptions& options) {
  validate_coloring(g, c);
  if (c.k != 2 && c.colors_used() > 2) {
    fail(ErrorKind::kPrecondition, "refutation needs a 2-coloring");
  }
  std::optional<RefutationWitness> w =
      options.structural_first ? structural(g, spec, c) : direct(g, c);
  if (!w) w = options.structural_first ? direct(g, c) : structural(g, spec, c);
  if (w) confirm_no_path(g, c, w->pair);
  return w;
}

std::string witness_to_json(const RefutationWitness& w) {
  nlohmann::json one_way = nlohmann::json::array();
  for (const auto& o : w.one_way) {
    if (o) {
      one_way.push_back({{"vertex", o->vertex}, {"exit", escape_name(o->exit)}});
    } else {
      one_way.push_back(nullptr);
    }
  }
  nlohmann::json j = {{"route", route_name(w.route)},
                      {"pair", {w.pair.first, w.pair.second}},
                      {"verified", true}};
  if (w.route == RefutationRoute::kStructural) {
    j["one_way"] = one_way;
    j["gadgets"] = {w.gadgets.first, w.gadgets.second};
  }
  return j.dump();
}

RefuteSummary refute_trials(const Graph& g, const GadgetSpec& spec, std::uint64_t trials,
                            std::uint64_t seed, int jobs, const RefuteOptions& options) {
  RefuteSummary summary;
  summary.trials = trials;
  summary.outcomes.resize(trials);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    try {
      for (std::uint64_t t = next++; t < trials && !failed; t = next++) {
        EdgeColoring c = random_coloring(g, 2, seed, t);
        summary.outcomes[t] = {t, refute_2_coloring(g, spec, c, options)};
      }
    } catch (...) {
      if (!failed.exchange(true)) error = std::current_exception();
    }
  };
  int threads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  for (const TrialOutcome& o : summary.outcomes) {
    if (!o.witness) {
      summary.undefeated.push_back(o.trial);
      continue;
    }
    ++summary.defeated;
    ++(o.witness->route == RefutationRoute::kDirect ? summary.direct : summary.structural);
  }
  return summary;
}

}  // namespace pconn
