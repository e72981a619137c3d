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

#include "graph/named.hpp"

#include <charconv>
#include <string>

#include "common/error.hpp"

namespace pconn::named {

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, std::move(edges));
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
  return Graph(a + b, std::move(edges));
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));          // outer cycle
    edges.push_back(make_edge(i, i + 5));                // spokes
    edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));  // inner pentagram
  }
  return Graph(10, std::move(edges));
}

Graph hypercube(int dim) {
  int n = 1 << dim;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if (!(v & (1 << b))) edges.push_back({v, v | (1 << b)});
  return Graph(n, std::move(edges));
}

Graph wheel(int rim) {
  std::vector<Edge> edges;
  for (int i = 1; i <= rim; ++i) {
    edges.push_back({0, i});
    edges.push_back(make_edge(i, i % rim + 1));
  }
  return Graph(rim + 1, std::move(edges));
}

Graph by_name(std::string_view name) {
  if (name == "petersen") return petersen();
  auto bad = [&]() -> Graph {
    fail(ErrorKind::kParse, "unknown graph name '" + std::string(name) + "'");
  };
  if (name.size() < 2) return bad();
  auto number = [&](std::string_view digits, int& out) {
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
    return ec == std::errc() && ptr == digits.data() + digits.size() && out >= 0 && out <= 4096;
  };
  char family = name[0];
  std::string_view rest = name.substr(1);
  int a = 0;
  int b = 0;
  if (family == 'K') {
    std::size_t comma = rest.find(',');
    if (comma != std::string_view::npos) {
      if (!number(rest.substr(0, comma), a) || !number(rest.substr(comma + 1), b)) return bad();
      return complete_bipartite(a, b);
    }
  }
  if (!number(rest, a)) return bad();
  switch (family) {
    case 'K':
      return complete(a);
    case 'C':
      if (a < 3) return bad();
      return cycle(a);
    case 'P':
      return path(a);
    case 'S':
      return star(a);
    case 'Q':
      if (a > 12) return bad();
      return hypercube(a);
    case 'W':
      if (a < 3) return bad();
      return wheel(a);
    default:
      return bad();
  }
}

}  // namespace pconn::named
