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

#include "lab/gadget.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "common/error.hpp"
#include "graph/algorithms.hpp"
#include "proper/engine.hpp"

namespace pconn {

namespace {

using nlohmann::json;

class Builder {
 public:
  Vertex add() { return n_++; }
  void edge(Vertex a, Vertex b) { edges_.push_back(make_edge(a, b)); }
  Graph graph() const { return Graph(n_, edges_); }

 private:
  int n_ = 6;
  std::vector<Edge> edges_;
};

// Entry and exit lie on the same side of the block unless `odd` is set.
BlockInfo make_block(Builder& b, BlockKind kind, int scale, bool odd) {
  BlockInfo block;
  if (kind == BlockKind::kK33) {
    int t = scale + 2;
    std::vector<Vertex> left;
    std::vector<Vertex> right;
    for (int i = 0; i < t; ++i) left.push_back(b.add());
    for (int i = 0; i < t; ++i) right.push_back(b.add());
    for (Vertex x : left)
      for (Vertex y : right) b.edge(x, y);
    block.vertices = left;
    block.vertices.insert(block.vertices.end(), right.begin(), right.end());
    block.entry = left[0];
    block.exit = odd ? right[0] : left[1];
  } else if (scale == 1) {
    block.entry = b.add();
    block.vertices.push_back(block.entry);
    block.exit = block.entry;
    if (odd) {
      block.exit = b.add();
      block.vertices.push_back(block.exit);
      b.edge(block.entry, block.exit);
    }
  } else {
    int len = 2 * scale;
    for (int i = 0; i < len; ++i) block.vertices.push_back(b.add());
    for (int i = 0; i < len; ++i) b.edge(block.vertices[i], block.vertices[(i + 1) % len]);
    block.entry = block.vertices[0];
    block.exit = block.vertices[odd ? 1 : 2];
  }
  return block;
}

HalfSpec make_half(Builder& b, BlockKind kind, int scale, Vertex p, Vertex p_prime,
                   bool odd_middle) {
  HalfSpec half;
  for (int i = 0; i < 3; ++i) half.blocks[i] = make_block(b, kind, scale, odd_middle && i == 1);
  half.attach_in = make_edge(p, half.blocks[0].entry);
  half.f = make_edge(half.blocks[0].exit, half.blocks[1].entry);
  half.f_prime = make_edge(half.blocks[1].exit, half.blocks[2].entry);
  half.attach_out = make_edge(half.blocks[2].exit, p_prime);
  for (const Edge& e : {half.attach_in, half.f, half.f_prime, half.attach_out}) b.edge(e.u, e.v);
  for (const BlockInfo& blk : half.blocks)
    half.vertices.insert(half.vertices.end(), blk.vertices.begin(), blk.vertices.end());
  std::sort(half.vertices.begin(), half.vertices.end());
  half.parity = odd_middle ? 1 : 0;
  return half;
}

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

Edge edge_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    fail(ErrorKind::kParse, "edge must be a pair of integers");
  return make_edge(j[0].get<int>(), j[1].get<int>());
}

json half_json(const HalfSpec& h) {
  json blocks = json::array();
  for (const BlockInfo& blk : h.blocks)
    blocks.push_back({{"vertices", blk.vertices}, {"entry", blk.entry}, {"exit", blk.exit}});
  return {{"vertices", h.vertices},
          {"blocks", blocks},
          {"attach_in", edge_json(h.attach_in)},
          {"attach_out", edge_json(h.attach_out)},
          {"cut_edges", json::array({edge_json(h.f), edge_json(h.f_prime)})},
          {"parity", h.parity}};
}

HalfSpec half_from(const json& j) {
  HalfSpec h;
  h.vertices = j.at("vertices").get<std::vector<Vertex>>();
  std::sort(h.vertices.begin(), h.vertices.end());
  const json& blocks = j.at("blocks");
  if (!blocks.is_array() || blocks.size() != 3) fail(ErrorKind::kParse, "a half has 3 blocks");
  for (int i = 0; i < 3; ++i) {
    h.blocks[i].vertices = blocks[i].at("vertices").get<std::vector<Vertex>>();
    h.blocks[i].entry = blocks[i].at("entry").get<Vertex>();
    h.blocks[i].exit = blocks[i].at("exit").get<Vertex>();
  }
  h.attach_in = edge_from(j.at("attach_in"));
  h.attach_out = edge_from(j.at("attach_out"));
  const json& cuts = j.at("cut_edges");
  if (!cuts.is_array() || cuts.size() != 2) fail(ErrorKind::kParse, "a half has 2 cut edges");
  h.f = edge_from(cuts[0]);
  h.f_prime = edge_from(cuts[1]);
  h.parity = j.at("parity").get<int>();
  return h;
}

std::string edge_text(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

bool has_edge(const Graph& g, const Edge& e) {
  return e.u >= 0 && e.v < g.order() && e.u != e.v && g.adjacent(e.u, e.v);
}

bool in_range(const Graph& g, const std::vector<Vertex>& vs) {
  return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return v >= 0 && v < g.order(); });
}

}  // namespace

std::string block_kind_name(BlockKind kind) { return kind == BlockKind::kK33 ? "k33" : "mini"; }

BlockKind parse_block_kind(const std::string& name) {
  if (name == "k33") return BlockKind::kK33;
  if (name == "mini") return BlockKind::kMiniPath;
  fail(ErrorKind::kPrecondition, "unknown variant '" + name + "', expected k33 or mini");
}

std::vector<Vertex> GadgetPair::region() const {
  std::vector<Vertex> r = x.vertices;
  r.insert(r.end(), x_prime.vertices.begin(), x_prime.vertices.end());
  r.push_back(p);
  r.push_back(p_prime);
  std::sort(r.begin(), r.end());
  return r;
}

Counterexample build_counterexample(BlockKind kind, int scale) {
  if (scale < 1) fail(ErrorKind::kPrecondition, "scale must be at least 1");
  Builder b;
  GadgetSpec spec;
  spec.kind = kind;
  spec.scale = scale;
  spec.linking = {make_edge(0, 5), make_edge(1, 2), make_edge(3, 4)};
  const char* names[3] = {"A", "B", "C"};
  for (int i = 0; i < 3; ++i) {
    GadgetPair& pair = spec.pairs[i];
    pair.name = names[i];
    pair.p = 2 * i;
    pair.p_prime = 2 * i + 1;
    pair.x = make_half(b, kind, scale, pair.p, pair.p_prime, false);
    pair.x_prime = make_half(b, kind, scale, pair.p, pair.p_prime, true);
    pair.near_exit = spec.linking[i];
    pair.far_exit = spec.linking[(i + 1) % 3];
  }
  for (const Edge& e : spec.linking) b.edge(e.u, e.v);
  return {b.graph(), spec};
}

std::string gadget_spec_to_json(const GadgetSpec& spec) {
  json pairs = json::array();
  for (const GadgetPair& p : spec.pairs) {
    pairs.push_back({{"name", p.name},
                     {"p", p.p},
                     {"p'", p.p_prime},
                     {"near_exit", edge_json(p.near_exit)},
                     {"far_exit", edge_json(p.far_exit)},
                     {"X", half_json(p.x)},
                     {"X'", half_json(p.x_prime)}});
  }
  json linking = json::array();
  for (const Edge& e : spec.linking) linking.push_back(edge_json(e));
  const auto& c = spec.connectors;
  json doc = {{"kind", block_kind_name(spec.kind)},
              {"scale", spec.scale},
              {"connectors",
               {{"a", c[0]}, {"a'", c[1]}, {"b", c[2]}, {"b'", c[3]}, {"c", c[4]}, {"c'", c[5]}}},
              {"linking", linking},
              {"pairs", pairs}};
  return doc.dump(2);
}

GadgetSpec gadget_spec_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::kParse, std::string("gadget spec is not valid JSON: ") + e.what());
  }
  try {
    GadgetSpec spec;
    spec.kind = parse_block_kind(doc.at("kind").get<std::string>());
    spec.scale = doc.at("scale").get<int>();
    const json& c = doc.at("connectors");
    const char* keys[6] = {"a", "a'", "b", "b'", "c", "c'"};
    for (int i = 0; i < 6; ++i) spec.connectors[i] = c.at(keys[i]).get<Vertex>();
    const json& linking = doc.at("linking");
    const json& pairs = doc.at("pairs");
    if (!linking.is_array() || linking.size() != 3 || !pairs.is_array() || pairs.size() != 3)
      fail(ErrorKind::kParse, "gadget spec needs 3 linking edges and 3 pairs");
    for (int i = 0; i < 3; ++i) {
      spec.linking[i] = edge_from(linking[i]);
      const json& p = pairs[i];
      GadgetPair& pair = spec.pairs[i];
      pair.name = p.at("name").get<std::string>();
      pair.p = p.at("p").get<Vertex>();
      pair.p_prime = p.at("p'").get<Vertex>();
      pair.near_exit = edge_from(p.at("near_exit"));
      pair.far_exit = edge_from(p.at("far_exit"));
      pair.x = half_from(p.at("X"));
      pair.x_prime = half_from(p.at("X'"));
    }
    return spec;
  } catch (const json::exception& e) {
    fail(ErrorKind::kParse, std::string("malformed gadget spec: ") + e.what());
  }
}

StructureReport verify_gadget_structure(const Graph& g, const GadgetSpec& spec) {
  StructureReport report;
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.predicates.push_back({std::move(name), ok, std::move(detail)});
  };
  const auto& con = spec.connectors;

  // Connectors and linking edges.
  {
    std::set<Vertex> distinct(con.begin(), con.end());
    bool ok = distinct.size() == 6 && in_range(g, {con.begin(), con.end()});
    std::string detail = ok ? "" : "connectors are not 6 distinct vertices";
    Edge expected[3] = {make_edge(con[0], con[5]), make_edge(con[1], con[2]),
                        make_edge(con[3], con[4])};
    for (int i = 0; ok && i < 3; ++i) {
      if (spec.linking[i] != expected[i] || !has_edge(g, expected[i])) {
        ok = false;
        detail = "linking edge " + edge_text(expected[i]) + " missing";
      }
    }
    add("connectors", ok, detail);
    if (!ok) return report;
  }

  // Every vertex belongs to exactly one half or is a connector.
  {
    std::vector<int> owner(g.order(), -1);
    for (Vertex v : con) owner[v] = 0;
    bool ok = true;
    std::string detail;
    for (const GadgetPair& pair : spec.pairs) {
      for (const HalfSpec* h : {&pair.x, &pair.x_prime}) {
        if (!in_range(g, h->vertices)) {
          ok = false;
          detail = "half of pair " + pair.name + " has an out-of-range vertex";
          break;
        }
        for (Vertex v : h->vertices) {
          if (owner[v] >= 0 && ok) {
            ok = false;
            detail = "vertex " + std::to_string(v) + " belongs to two parts";
          }
          owner[v] = 1;
        }
      }
    }
    for (Vertex v = 0; ok && v < g.order(); ++v) {
      if (owner[v] < 0) {
        ok = false;
        detail = "vertex " + std::to_string(v) + " belongs to no half";
      }
    }
    add("partition", ok, detail);
    if (!ok) return report;
  }

  // Attachments, blocks and cut edges per half.
  bool attach_ok = true;
  bool blocks_ok = true;
  bool cuts_ok = true;
  bool parity_ok = true;
  std::string attach_detail;
  std::string blocks_detail;
  std::string cuts_detail;
  std::string parity_detail;
  for (const GadgetPair& pair : spec.pairs) {
    if (pair.near_exit != spec.linking[&pair - spec.pairs.data()] || !pair.near_exit.has(pair.p) ||
        !pair.far_exit.has(pair.p_prime)) {
      attach_ok = false;
      attach_detail = "exits of pair " + pair.name + " do not match the linking edges";
    }
    int parities[2];
    int which = 0;
    for (const HalfSpec* h : {&pair.x, &pair.x_prime}) {
      std::string where = "pair " + pair.name + (which == 0 ? " X" : " X'");
      const BlockInfo& first = h->blocks[0];
      const BlockInfo& last = h->blocks[2];
      if (h->attach_in != make_edge(pair.p, first.entry) ||
          h->attach_out != make_edge(last.exit, pair.p_prime) || !has_edge(g, h->attach_in) ||
          !has_edge(g, h->attach_out)) {
        attach_ok = false;
        attach_detail = where + ": attachment edges do not join p and p' to the chain ends";
      }
      for (const BlockInfo& blk : h->blocks) {
        InducedSubgraph sub = induced_subgraph(g, blk.vertices);
        bool in_block = std::binary_search(sub.to_host.begin(), sub.to_host.end(), blk.entry) &&
                        std::binary_search(sub.to_host.begin(), sub.to_host.end(), blk.exit);
        if (!in_block || !is_connected(sub.graph) || !bipartition(sub.graph)) {
          blocks_ok = false;
          blocks_detail = where + ": a block is not a connected bipartite piece with its ends";
        }
      }
      auto block_of = [&](Vertex v) {
        for (int i = 0; i < 3; ++i) {
          const auto& vs = h->blocks[i].vertices;
          if (std::find(vs.begin(), vs.end(), v) != vs.end()) return i;
        }
        return -1;
      };
      auto joins = [&](const Edge& e, int i, int j) {
        int bu = block_of(e.u);
        int bv = block_of(e.v);
        return has_edge(g, e) && ((bu == i && bv == j) || (bu == j && bv == i));
      };
      if (!joins(h->f, 0, 1) || !joins(h->f_prime, 1, 2)) {
        cuts_ok = false;
        cuts_detail = where + ": f must join blocks 1-2 and f' blocks 2-3";
      } else {
        InducedSubgraph sub = induced_subgraph(g, h->vertices);
        std::vector<Edge> cut;
        for (int id : bridges_and_cut_vertices(sub.graph).bridges) {
          const Edge& e = sub.graph.edge(id);
          Edge host = make_edge(sub.to_host[e.u], sub.to_host[e.v]);
          if (host == h->f || host == h->f_prime) continue;
          // A two-vertex block contributes its single edge as an extra bridge.
          int bu = block_of(host.u);
          if (bu >= 0 && bu == block_of(host.v) && h->blocks[bu].vertices.size() == 2) continue;
          cut.push_back(host);
        }
        bool has_f = has_edge(g, h->f) && has_edge(g, h->f_prime);
        if (!cut.empty() || !has_f || !is_connected(sub.graph)) {
          cuts_ok = false;
          cuts_detail = where + ": cut edges of the half are not exactly {f, f'}" +
                        (cut.empty() ? std::string() : ", extra " + edge_text(cut[0]));
        } else {
          auto bridges = bridges_and_cut_vertices(sub.graph).bridges;
          int found = 0;
          for (int id : bridges) {
            const Edge& e = sub.graph.edge(id);
            Edge host = make_edge(sub.to_host[e.u], sub.to_host[e.v]);
            found += host == h->f || host == h->f_prime;
          }
          if (found != 2) {
            cuts_ok = false;
            cuts_detail = where + ": f or f' is not a cut edge of the half";
          }
        }
      }
      std::vector<Vertex> with_ends = h->vertices;
      with_ends.push_back(pair.p);
      with_ends.push_back(pair.p_prime);
      std::sort(with_ends.begin(), with_ends.end());
      InducedSubgraph sub = induced_subgraph(g, with_ends);
      auto bip = bipartition(sub.graph);
      if (!bip) {
        parity_ok = false;
        parity_detail = where + ": the half is not bipartite, p-p' parity is not fixed";
        parities[which] = -1;
      } else {
        int actual = bip->side[sub.from_host[pair.p]] != bip->side[sub.from_host[pair.p_prime]];
        parities[which] = actual;
        if (actual != h->parity) {
          parity_ok = false;
          parity_detail = where + ": declared parity " + std::to_string(h->parity) +
                          " but paths have parity " + std::to_string(actual);
        }
      }
      ++which;
    }
    if (parities[0] >= 0 && parities[1] >= 0 && parities[0] == parities[1]) {
      parity_ok = false;
      parity_detail = "pair " + pair.name + ": both halves have the same parity";
    }
  }
  add("attachments", attach_ok, attach_detail);
  add("blocks", blocks_ok, blocks_detail);
  add("two_cut_edges_per_half", cuts_ok, cuts_detail);
  add("opposite_parities", parity_ok, parity_detail);

  int kappa = connectivity(g);
  add("connectivity_2", kappa == 2, "kappa = " + std::to_string(kappa));
  {
    std::vector<int> keep;
    int cut1 = *g.edge_id(con[0], con[5]);
    int cut2 = *g.edge_id(con[1], con[2]);
    for (int id = 0; id < g.size(); ++id)
      if (id != cut1 && id != cut2) keep.push_back(id);
    bool separates = !is_connected(edge_subgraph(g, keep));
    add("linking_edge_cut", separates, separates ? "" : "{ac', a'b} does not separate the graph");
  }
  if (spec.kind == BlockKind::kK33) {
    add("min_degree_3", g.min_degree() >= 3, "delta = " + std::to_string(g.min_degree()));
  }
  add("noncomplete", !g.is_complete(), "");
  report.ok = std::all_of(report.predicates.begin(), report.predicates.end(),
                          [](const StructurePredicate& p) { return p.ok; });
  return report;
}

std::string structure_report_to_json(const StructureReport& report) {
  json preds = json::array();
  for (const auto& p : report.predicates)
    preds.push_back({{"name", p.name}, {"ok", p.ok}, {"detail", p.detail}});
  return json{{"ok", report.ok}, {"predicates", preds}}.dump();
}

std::string escape_name(Escape e) {
  switch (e) {
    case Escape::kNear:
      return "near";
    case Escape::kFar:
      return "far";
    case Escape::kNone:
      return "none";
  }
  return "none";
}

bool can_escape(const Graph& g, const GadgetSpec& spec, int pair, const EdgeColoring& c, Vertex v,
                Escape exit) {
  const GadgetPair& gp = spec.pairs[pair];
  const Edge& e = exit == Escape::kNear ? gp.near_exit : gp.far_exit;
  Vertex inner = exit == Escape::kNear ? gp.p : gp.p_prime;
  Vertex outer = e.other(inner);
  std::vector<char> allowed(g.order(), 0);
  for (Vertex x : gp.region()) allowed[x] = 1;
  allowed[outer] = 1;
  PathQuery q;
  q.source = v;
  q.target = outer;
  q.allowed = &allowed;
  return find_proper_path(g, c, q).has_value();
}

std::optional<OneWayVertex> find_one_way_vertex(const Graph& g, const GadgetSpec& spec, int pair,
                                                const EdgeColoring& c) {
  for (Vertex v : spec.pairs[pair].region()) {
    bool near = can_escape(g, spec, pair, c, v, Escape::kNear);
    bool far = can_escape(g, spec, pair, c, v, Escape::kFar);
    if (near && far) continue;
    return OneWayVertex{v, near ? Escape::kNear : far ? Escape::kFar : Escape::kNone};
  }
  return std::nullopt;
}

}  // namespace pconn
