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

#include "pconn/pconn.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include <json.hpp>

#include "common/error.hpp"
#include "construct/diam3.hpp"
#include "construct/lemmas.hpp"
#include "graph/algorithms.hpp"
#include "graph/io.hpp"
#include "graph/named.hpp"
#include "lab/gadget.hpp"
#include "lab/refute.hpp"
#include "proper/checks.hpp"
#include "solver/sampling.hpp"
#include "solver/search.hpp"

struct pc_graph {
  pconn::Graph graph;
};

struct pc_coloring {
  pconn::EdgeColoring coloring;
};

struct pc_gadget {
  pconn::GadgetSpec spec;
};

namespace {

using nlohmann::json;
using pconn::ErrorKind;

thread_local std::string g_last_error;
thread_local int g_last_line = 0;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_out(char** out, const std::string& s) {
  if (out) *out = dup_string(s);
}

pc_status status_of(ErrorKind kind) {
  return kind == ErrorKind::kInternal ? PC_INTERNAL_ERROR : PC_INPUT_ERROR;
}

// Runs body, translating exceptions into status codes and the last error.
template <typename F>
pc_status guarded(F&& body) {
  g_last_error.clear();
  g_last_line = 0;
  try {
    return body();
  } catch (const pconn::ParseError& e) {
    g_last_error = e.what();
    g_last_line = e.line();
    return PC_INPUT_ERROR;
  } catch (const pconn::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PC_INTERNAL_ERROR;
  }
}

pc_status null_argument(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return PC_INPUT_ERROR;
}

json pair_json(const std::optional<pconn::VertexPair>& p) {
  if (!p) return nullptr;
  return json::array({p->first, p->second});
}

json coloring_json(const pconn::Graph& g, const pconn::EdgeColoring& c) {
  return json::parse(pconn::coloring_to_json(g, c));
}

void store(pc_coloring** out, pconn::EdgeColoring c) {
  if (out) *out = new pc_coloring{std::move(c)};
}

pconn::GraphFormat to_format(pc_format f) {
  switch (f) {
    case PC_FORMAT_EDGELIST:
      return pconn::GraphFormat::kEdgeList;
    case PC_FORMAT_GRAPH6:
      return pconn::GraphFormat::kGraph6;
    default:
      return pconn::GraphFormat::kAuto;
  }
}

}  // namespace

extern "C" {

const char* pc_last_error(void) { return g_last_error.c_str(); }

int pc_last_error_line(void) { return g_last_line; }

void pc_string_free(char* s) { std::free(s); }

const char* pc_version(void) { return "1.0.0"; }

pc_status pc_graph_parse(const char* text, pc_format format, pc_graph** out) {
  if (!text || !out) return null_argument("text/out");
  return guarded([&] {
    *out = new pc_graph{pconn::parse_graph(text, to_format(format))};
    return PC_OK;
  });
}

pc_status pc_graph_from_edges(int n, const int* edges, int m, pc_graph** out) {
  if (!out || (m > 0 && !edges)) return null_argument("edges/out");
  return guarded([&] {
    std::vector<pconn::Edge> list;
    for (int i = 0; i < m; ++i) list.push_back({edges[2 * i], edges[2 * i + 1]});
    *out = new pc_graph{pconn::Graph(n, std::move(list))};
    return PC_OK;
  });
}

pc_status pc_graph_named(const char* name, pc_graph** out) {
  if (!name || !out) return null_argument("name/out");
  return guarded([&] {
    *out = new pc_graph{pconn::named::by_name(name)};
    return PC_OK;
  });
}

void pc_graph_free(pc_graph* g) { delete g; }

int pc_graph_order(const pc_graph* g) { return g ? g->graph.order() : 0; }

int pc_graph_size(const pc_graph* g) { return g ? g->graph.size() : 0; }

pc_status pc_graph_format(const pc_graph* g, pc_format format, char** out) {
  if (!g || !out) return null_argument("graph/out");
  return guarded([&] {
    *out = dup_string(format == PC_FORMAT_GRAPH6 ? pconn::format_graph6(g->graph) + "\n"
                                                 : pconn::format_edge_list(g->graph));
    return PC_OK;
  });
}

pc_status pc_graph_info(const pc_graph* g, char** out_json) {
  if (!g) return null_argument("graph");
  return guarded([&] {
    const pconn::Graph& gr = g->graph;
    bool connected = pconn::is_connected(gr);
    json j = {{"order", gr.order()},
              {"size", gr.size()},
              {"min_degree", gr.order() ? gr.min_degree() : 0},
              {"max_degree", gr.order() ? gr.max_degree() : 0},
              {"connected", connected},
              {"complete", gr.is_complete()},
              {"bipartite", pconn::bipartition(gr).has_value()}};
    if (connected && gr.order() >= 2) {
      j["connectivity"] = pconn::connectivity(gr);
      j["edge_connectivity"] = pconn::edge_connectivity(gr);
      j["diameter"] = pconn::diameter(gr);
      j["bridges"] = pconn::bridges_and_cut_vertices(gr).bridges.size();
    }
    set_out(out_json, j.dump());
    return PC_OK;
  });
}

pc_status pc_coloring_parse(const pc_graph* g, const char* text, pc_coloring** out) {
  if (!g || !text || !out) return null_argument("graph/json/out");
  return guarded([&] {
    *out = new pc_coloring{pconn::coloring_from_json(g->graph, text)};
    return PC_OK;
  });
}

pc_status pc_coloring_to_json(const pc_graph* g, const pc_coloring* c, char** out) {
  if (!g || !c || !out) return null_argument("graph/coloring/out");
  return guarded([&] {
    *out = dup_string(pconn::coloring_to_json(g->graph, c->coloring));
    return PC_OK;
  });
}

int pc_coloring_colors(const pc_coloring* c) { return c ? c->coloring.k : 0; }

void pc_coloring_free(pc_coloring* c) { delete c; }

pc_status pc_verify(const pc_graph* g, const pc_coloring* c, int strong, char** out_json) {
  if (!g || !c) return null_argument("graph/coloring");
  return guarded([&] {
    pconn::ConnectivityVerdict v = pconn::is_proper_connected(g->graph, c->coloring);
    json j = {{"k", c->coloring.k},
              {"proper_connected", v.ok},
              {"failing_pair", pair_json(v.failing_pair)},
              {"evidence", "exhaustive"}};
    bool ok = v.ok;
    if (strong) {
      pconn::StrongVerdict s = pconn::has_strong_property(g->graph, c->coloring, false);
      j["strong"] = s.ok;
      j["strong_failing_pair"] = pair_json(s.failing_pair);
      ok = ok && s.ok;
    }
    set_out(out_json, j.dump());
    return ok ? PC_OK : PC_PROPERTY_FAILED;
  });
}

pc_status pc_exact(const pc_graph* g, int k_max, int strong, int64_t budget_nodes,
                   char** out_json, pc_coloring** out_coloring) {
  if (!g) return null_argument("graph");
  return guarded([&] {
    pconn::SearchOptions opt;
    opt.require_strong = strong != 0;
    if (budget_nodes > 0) opt.budget_nodes = budget_nodes;
    pconn::PcResult r = pconn::pc_exact(g->graph, k_max, opt);
    json j = {{"value", r.value},
              {"exact", r.exact},
              {"lower", r.lower},
              {"upper", r.upper},
              {"strong", strong != 0},
              {"evidence", pconn::evidence_name(r.evidence)},
              {"nodes", r.nodes}};
    j["coloring"] = r.coloring ? coloring_json(g->graph, *r.coloring) : json(nullptr);
    set_out(out_json, j.dump());
    if (r.coloring) store(out_coloring, *r.coloring);
    return r.exact ? PC_OK : PC_INCONCLUSIVE;
  });
}

pc_status pc_sample(const pc_graph* g, int k, uint64_t trials, uint64_t seed, int jobs,
                    char** out_json) {
  if (!g) return null_argument("graph");
  return guarded([&] {
    pconn::SampleReport r = pconn::sample_refute(g->graph, k, trials, seed, jobs);
    json failures = json::array();
    for (const auto& f : r.failures)
      failures.push_back({{"trial", f.trial}, {"pair", {f.pair.first, f.pair.second}}});
    json j = {{"k", k},
              {"trials", trials},
              {"seed", seed},
              {"failed", r.failures.size()},
              {"succeeded", r.successes.size()},
              {"successful_trials", r.successes},
              {"failures", failures},
              {"evidence", "sampled_refutation"}};
    set_out(out_json, j.dump());
    return r.successes.empty() ? PC_OK : PC_PROPERTY_FAILED;
  });
}

pc_status pc_color(const pc_graph* g, const char* method, int explain, char** out_json,
                   pc_coloring** out_coloring) {
  if (!g || !method) return null_argument("graph/method");
  return guarded([&] {
    const pconn::Graph& gr = g->graph;
    std::string m = method;
    json j = {{"method", m}, {"evidence", "constructive_upper"}};
    pconn::EdgeColoring c;
    bool strong = false;
    if (m == "diam3") {
      pconn::Diam3Result r = pconn::color_diam3_detailed(gr);
      c = r.coloring;
      j["case"] = pconn::diam3_case_name(r.decomposition.tag);
      j["local_resolves"] = r.local_resolves;
      if (explain) j["decomposition"] = json::parse(pconn::diam3_to_json(r.decomposition));
    } else if (m == "3ec") {
      c = pconn::color_3ec(gr);
      strong = true;
    } else if (m == "bipartite") {
      c = pconn::strong_2_coloring_bipartite(gr);
      strong = true;
    } else if (m == "2conn") {
      c = pconn::color_2connected_3(gr);
      strong = true;
    } else {
      pconn::fail(ErrorKind::kPrecondition,
                  "unknown method '" + m + "', expected diam3, 3ec, bipartite or 2conn");
    }
    pconn::ConnectivityVerdict v = pconn::is_proper_connected(gr, c);
    bool verified = v.ok;
    if (strong) verified = verified && pconn::has_strong_property(gr, c, false).ok;
    if (!verified) {
      pconn::fail(ErrorKind::kInternal, "method " + m + " produced an unverified coloring");
    }
    j["k"] = c.k;
    j["colors_used"] = c.colors_used();
    j["verified"] = true;
    j["strong"] = strong;
    j["coloring"] = coloring_json(gr, c);
    set_out(out_json, j.dump());
    store(out_coloring, std::move(c));
    return PC_OK;
  });
}

pc_status pc_gen_counterexample(const char* variant, int scale, pc_graph** out_graph,
                                pc_gadget** out_spec) {
  if (!variant || !out_graph) return null_argument("variant/out");
  return guarded([&] {
    pconn::Counterexample ce = pconn::build_counterexample(pconn::parse_block_kind(variant), scale);
    *out_graph = new pc_graph{std::move(ce.graph)};
    if (out_spec) *out_spec = new pc_gadget{std::move(ce.spec)};
    return PC_OK;
  });
}

pc_status pc_gadget_parse(const char* text, pc_gadget** out) {
  if (!text || !out) return null_argument("json/out");
  return guarded([&] {
    *out = new pc_gadget{pconn::gadget_spec_from_json(text)};
    return PC_OK;
  });
}

pc_status pc_gadget_to_json(const pc_gadget* spec, char** out) {
  if (!spec || !out) return null_argument("spec/out");
  return guarded([&] {
    *out = dup_string(pconn::gadget_spec_to_json(spec->spec));
    return PC_OK;
  });
}

void pc_gadget_free(pc_gadget* spec) { delete spec; }

pc_status pc_verify_gadget(const pc_graph* g, const pc_gadget* spec, char** out_json) {
  if (!g || !spec) return null_argument("graph/spec");
  return guarded([&] {
    pconn::StructureReport r = pconn::verify_gadget_structure(g->graph, spec->spec);
    set_out(out_json, pconn::structure_report_to_json(r));
    return r.ok ? PC_OK : PC_PROPERTY_FAILED;
  });
}

pc_status pc_refute(const pc_graph* g, const pc_gadget* spec, uint64_t trials, uint64_t seed,
                    int jobs, char** out_json) {
  if (!g || !spec) return null_argument("graph/spec");
  return guarded([&] {
    pconn::RefuteSummary s = pconn::refute_trials(g->graph, spec->spec, trials, seed, jobs);
    json witnesses = json::array();
    for (const auto& o : s.outcomes) {
      if (!o.witness) continue;
      json w = json::parse(pconn::witness_to_json(*o.witness));
      w["trial"] = o.trial;
      witnesses.push_back(std::move(w));
    }
    json j = {{"trials", s.trials},
              {"seed", seed},
              {"defeated", s.defeated},
              {"direct", s.direct},
              {"structural", s.structural},
              {"undefeated", s.undefeated},
              {"witnesses", witnesses},
              {"evidence", "sampled_refutation"}};
    set_out(out_json, j.dump());
    return s.undefeated.empty() ? PC_OK : PC_PROPERTY_FAILED;
  });
}

pc_status pc_refute_coloring(const pc_graph* g, const pc_gadget* spec, const pc_coloring* c,
                             char** out_json) {
  if (!g || !spec || !c) return null_argument("graph/spec/coloring");
  return guarded([&] {
    auto w = pconn::refute_2_coloring(g->graph, spec->spec, c->coloring);
    json j = {{"refuted", w.has_value()}};
    if (w) {
      j["witness"] = json::parse(pconn::witness_to_json(*w));
    } else {
      j["event"] = "coloring is proper connected: the lower bound does not hold for it";
    }
    set_out(out_json, j.dump());
    return w ? PC_OK : PC_PROPERTY_FAILED;
  });
}

}  // extern "C"
