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

#include "proper/coloring.hpp"

#include <algorithm>

#include <json.hpp>

#include "common/error.hpp"

namespace pconn {

bool EdgeColoring::is_total() const {
  return std::none_of(color.begin(), color.end(), [](int x) { return x == 0; });
}

int EdgeColoring::colors_used() const {
  std::uint64_t seen = 0;
  for (int x : color)
    if (x > 0) seen |= std::uint64_t{1} << x;
  return __builtin_popcountll(seen);
}

void validate_coloring(const Graph& g, const EdgeColoring& c) {
  if (!(c.k >= 1 && c.k <= kMaxColors)) {
    fail(ErrorKind::kInvalidColoring, "color count must be in 1.." + std::to_string(kMaxColors));
  }
  if (!(static_cast<int>(c.color.size()) == g.size())) {
    fail(ErrorKind::kInvalidColoring, "coloring has " + std::to_string(c.color.size()) +
                                      " entries for " + std::to_string(g.size()) + " edges");
  }
  for (int id = 0; id < g.size(); ++id) {
    int x = c.color[id];
    if (x == 0) {
      fail(ErrorKind::kInvalidColoring, "edge " + std::to_string(g.edge(id).u) + "-" +
                                            std::to_string(g.edge(id).v) + " is uncolored");
    }
    if (!(x >= 1 && x <= c.k)) {
      fail(ErrorKind::kInvalidColoring, "color " + std::to_string(x) + " out of range 1.." +
                                        std::to_string(c.k));
    }
  }
}

EdgeColoring uniform_coloring(const Graph& g, int k, int color) {
  return EdgeColoring(k, g.size(), color);
}

ProperPathCertificate make_certificate(const Graph& g, const EdgeColoring& c,
                                       std::vector<Vertex> path) {
  ProperPathCertificate cert;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto id = g.edge_id(path[i], path[i + 1]);
    cert.colors.push_back(id ? c[*id] : 0);
  }
  if (!cert.colors.empty()) {
    cert.start_color = cert.colors.front();
    cert.end_color = cert.colors.back();
  }
  cert.path = std::move(path);
  return cert;
}

bool certificate_valid(const Graph& g, const EdgeColoring& c, const ProperPathCertificate& p) {
  if (p.path.size() < 2 || p.colors.size() + 1 != p.path.size()) return false;
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : p.path) {
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i + 1 < p.path.size(); ++i) {
    auto id = g.edge_id(p.path[i], p.path[i + 1]);
    if (!id || c[*id] != p.colors[i]) return false;
    if (i > 0 && p.colors[i] == p.colors[i - 1]) return false;
  }
  return p.start_color == p.colors.front() && p.end_color == p.colors.back();
}

std::string coloring_to_json(const Graph& g, const EdgeColoring& c) {
  nlohmann::json edges = nlohmann::json::array();
  for (int id = 0; id < g.size(); ++id)
    edges.push_back({g.edge(id).u, g.edge(id).v, c[id]});
  nlohmann::json doc;
  doc["k"] = c.k;
  doc["edges"] = std::move(edges);
  return doc.dump();
}

EdgeColoring coloring_from_json(const Graph& g, std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::kParse, std::string("coloring JSON: ") + e.what());
  }
  require(doc.is_object() && doc.contains("k") && doc["k"].is_number_integer() &&
              doc.contains("edges") && doc["edges"].is_array(),
          ErrorKind::kParse, "coloring JSON needs integer \"k\" and array \"edges\"");
  EdgeColoring c(doc["k"].get<int>(), g.size());
  for (const auto& item : doc["edges"]) {
    require(item.is_array() && item.size() == 3 && item[0].is_number_integer() &&
                item[1].is_number_integer() && item[2].is_number_integer(),
            ErrorKind::kParse, "coloring entries must be [u, v, color]");
    int u = item[0].get<int>();
    int v = item[1].get<int>();
    int color = item[2].get<int>();
    auto id = (u >= 0 && v >= 0 && u < g.order() && v < g.order() && u != v)
                  ? g.edge_id(u, v)
                  : std::nullopt;
    if (!id.has_value()) {
      fail(ErrorKind::kInvalidColoring, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                        " is not in the graph");
    }
    if (!(c[*id] == 0)) {
      fail(ErrorKind::kInvalidColoring, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                        " colored twice");
    }
    require(color >= 1, ErrorKind::kInvalidColoring, "colors start at 1");
    c[*id] = color;
  }
  validate_coloring(g, c);
  return c;
}

}  // namespace pconn
