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

#include "graph/io.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include "common/error.hpp"

namespace pconn {
namespace {

struct Line {
  int number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<Line> meaningful_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    ++number;
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    std::string_view t = trim(raw);
    if (t.empty() || t.front() == '#') continue;
    lines.push_back({number, t});
  }
  return lines;
}

// Parses whitespace separated integers; returns false on any stray token.
bool parse_ints(std::string_view s, std::vector<long long>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i == s.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
    if (ec != std::errc() || (ptr != s.data() + s.size() && *ptr != ' ' && *ptr != '\t')) {
      return false;
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - s.data());
  }
  return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  auto lines = meaningful_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input; expected header \"n m\"");
  std::vector<long long> ints;
  if (!parse_ints(lines[0].text, ints) || ints.size() != 2) {
    throw ParseError(lines[0].number, "expected header \"n m\"");
  }
  long long n = ints[0];
  long long m = ints[1];
  if (n < 0 || m < 0 || n > 1'000'000) throw ParseError(lines[0].number, "invalid n or m");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    int where = lines.size() > static_cast<std::size_t>(m) + 1
                    ? lines[m + 1].number
                    : (lines.back().number + 1);
    throw ParseError(where, "header declares " + std::to_string(m) + " edges but " +
                                std::to_string(lines.size() - 1) + " edge lines follow");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (!parse_ints(lines[i].text, ints) || ints.size() != 2) {
      throw ParseError(lines[i].number, "expected edge \"u v\"");
    }
    if (ints[0] < 0 || ints[0] >= n || ints[1] < 0 || ints[1] >= n) {
      throw ParseError(lines[i].number, "vertex id out of range 0.." + std::to_string(n - 1));
    }
    if (ints[0] == ints[1]) throw ParseError(lines[i].number, "self-loop");
    Edge e = make_edge(static_cast<int>(ints[0]), static_cast<int>(ints[1]));
    if (!seen.insert({e.u, e.v}).second) throw ParseError(lines[i].number, "duplicate edge");
    edges.push_back(e);
  }
  try {
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const Error& e) {
    throw ParseError(lines[0].number, e.what());
  }
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.substr(0, 10) == ">>graph6<<") line.remove_prefix(10);
  auto byte = [&](std::size_t i) -> int {
    if (i >= line.size()) throw ParseError(1, "graph6 string truncated");
    int c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw ParseError(1, "invalid graph6 character");
    return c - 63;
  };
  std::size_t pos = 0;
  long long n = 0;
  if (line.empty()) throw ParseError(1, "empty graph6 string");
  if (line[0] != '~') {
    n = byte(0);
    pos = 1;
  } else if (line.size() > 1 && line[1] != '~') {
    n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    n = 0;
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
    pos = 8;
  }
  if (n > 1'000'000) throw ParseError(1, "graph6 order too large");
  std::vector<Edge> edges;
  long long bit_index = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit_index) {
      int b = byte(pos + static_cast<std::size_t>(bit_index / 6));
      if ((b >> (5 - bit_index % 6)) & 1) edges.push_back({u, v});
    }
  }
  std::size_t expected = pos + static_cast<std::size_t>((bit_index + 5) / 6);
  if (line.size() != expected) throw ParseError(1, "graph6 string has trailing data");
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string format_graph6(const Graph& g) {
  std::string out;
  long long n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out += "~~";
    for (int shift : {30, 24, 18, 12, 6, 0}) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  }
  int acc = 0;
  int bits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

std::vector<Graph> parse_graph6_file(std::string_view text) {
  std::vector<Graph> graphs;
  for (const Line& line : meaningful_lines(text)) {
    try {
      graphs.push_back(parse_graph6(line.text));
    } catch (const ParseError& e) {
      std::string msg = e.what();
      throw ParseError(line.number, msg.substr(msg.find(':') + 2));
    }
  }
  return graphs;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kAuto) {
    auto lines = meaningful_lines(text);
    std::vector<long long> ints;
    format = (!lines.empty() && parse_ints(lines[0].text, ints) && ints.size() == 2)
                 ? GraphFormat::kEdgeList
                 : GraphFormat::kGraph6;
  }
  if (format == GraphFormat::kEdgeList) return parse_edge_list(text);
  auto graphs = parse_graph6_file(text);
  if (graphs.size() != 1) {
    throw ParseError(1, "expected exactly one graph6 graph, found " +
                            std::to_string(graphs.size()));
  }
  return graphs.front();
}

}  // namespace pconn
