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

#include "corpus.hpp"

#include "geng_bridge.h"

namespace pconn::testing {

namespace {

struct Context {
  const std::function<void(const Graph&)>* visit;
};

void on_graph(void* ctx, int n, int m, const int* edges) {
  std::vector<Edge> list;
  list.reserve(m);
  for (int i = 0; i < m; ++i) list.push_back(make_edge(edges[2 * i], edges[2 * i + 1]));
  (*static_cast<Context*>(ctx)->visit)(Graph(n, std::move(list)));
}

void run_geng(std::vector<std::string> args, const std::function<void(const Graph&)>& visit) {
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  argv.push_back(nullptr);
  Context ctx{&visit};
  pconn_geng_run(static_cast<int>(args.size()), argv.data(), &on_graph, &ctx);
}

std::vector<std::string> geng_args(int n, const std::vector<std::string>& flags) {
  std::vector<std::string> args{"geng", "-q"};
  args.insert(args.end(), flags.begin(), flags.end());
  args.push_back(std::to_string(n));
  return args;
}

}  // namespace

void for_each_graph(int n, const std::vector<std::string>& flags,
                    const std::function<void(const Graph&)>& visit) {
  run_geng(geng_args(n, flags), visit);
}

void for_each_graph(int n, const std::vector<std::string>& flags, int min_edges, int max_edges,
                    const std::function<void(const Graph&)>& visit) {
  std::vector<std::string> args = geng_args(n, flags);
  args.push_back(std::to_string(min_edges) + ":" + std::to_string(max_edges));
  run_geng(std::move(args), visit);
}

}  // namespace pconn::testing
