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

// Command-line front end. Talks to the library only through the C API.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pconn/pconn.h"

namespace {

using nlohmann::json;

enum Exit { kSuccess = 0, kPropertyFailed = 1, kInputError = 2, kInconclusive = 3 };

struct Global {
  std::string format = "auto";
  bool json_output = false;
  bool deterministic = false;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::int64_t budget_nodes = 0;
};

struct InputError {
  std::string message;
};

struct GraphDeleter {
  void operator()(pc_graph* g) const { pc_graph_free(g); }
};
struct ColoringDeleter {
  void operator()(pc_coloring* c) const { pc_coloring_free(c); }
};
struct GadgetDeleter {
  void operator()(pc_gadget* s) const { pc_gadget_free(s); }
};
using GraphPtr = std::unique_ptr<pc_graph, GraphDeleter>;
using ColoringPtr = std::unique_ptr<pc_coloring, ColoringDeleter>;
using GadgetPtr = std::unique_ptr<pc_gadget, GadgetDeleter>;

// Takes ownership of a C string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  pc_string_free(s);
  return out;
}

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError{"cannot write " + path};
  out << text;
}

// Collects the pieces of a RunReport while a command runs.
class Run {
 public:
  Run(const Global& g, std::string command) : global_(g), command_(std::move(command)) {
    start_ = std::chrono::steady_clock::now();
  }

  void input(const std::string& role, const std::string& name, const std::string& bytes) {
    inputs_[role] = {{"path", name}, {"fnv1a64", fnv1a(bytes)}};
  }

  // Throws InputError with the library message for a failed call.
  void check(pc_status s, const std::string& context) {
    if (s == PC_INPUT_ERROR) {
      // Parse messages already carry "line N".
      throw InputError{context + ": " + pc_last_error()};
    }
    if (s == PC_INTERNAL_ERROR) {
      internal_ = true;
      throw InputError{context + ": internal error: " + pc_last_error()};
    }
  }

  bool internal() const { return internal_; }

  GraphPtr load_graph(const std::string& path) {
    const std::string prefix = "named:";
    pc_graph* g = nullptr;
    if (path.rfind(prefix, 0) == 0) {
      check(pc_graph_named(path.c_str() + prefix.size(), &g), path);
      input("graph", path, path);
      return GraphPtr(g);
    }
    std::string text = read_file(path);
    input("graph", path, text);
    pc_format f = global_.format == "edgelist" ? PC_FORMAT_EDGELIST
                  : global_.format == "graph6" ? PC_FORMAT_GRAPH6
                                               : PC_FORMAT_AUTO;
    check(pc_graph_parse(text.c_str(), f, &g), path);
    return GraphPtr(g);
  }

  int finish(int code, json payload, const std::string& human, json evidence = json::array()) {
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start_)
                    .count();
    json report = {{"command", command_},
                   {"inputs", inputs_},
                   {"payload", std::move(payload)},
                   {"evidence", std::move(evidence)},
                   {"seed", global_.seed},
                   {"exit_code", code},
                   {"wall_time_ms", global_.deterministic ? 0.0 : ms},
                   {"version", pc_version()}};
    last_report_ = report.dump(2) + "\n";
    if (global_.json_output) {
      std::cout << last_report_;
    } else if (!human.empty()) {
      std::cout << human << (human.back() == '\n' ? "" : "\n");
    }
    return code;
  }

  const std::string& report_text() const { return last_report_; }

 private:
  const Global& global_;
  std::string command_;
  json inputs_ = json::object();
  std::chrono::steady_clock::time_point start_;
  bool internal_ = false;
  std::string last_report_;
};

json evidence_of(const json& payload) {
  json tags = json::array();
  if (payload.contains("evidence")) tags.push_back(payload["evidence"]);
  return tags;
}

std::string pair_text(const json& p) {
  return p.is_array() ? std::to_string(p[0].get<int>()) + "," + std::to_string(p[1].get<int>())
                      : "-";
}

int cmd_exact(Run& run, const Global& gl, const std::string& graph, int kmax, bool strong) {
  GraphPtr g = run.load_graph(graph);
  char* out = nullptr;
  pc_status s = pc_exact(g.get(), kmax, strong ? 1 : 0, gl.budget_nodes, &out, nullptr);
  run.check(s, "exact");
  json payload = json::parse(take(out));
  std::string name = strong ? "spc" : "pc";
  std::string human =
      s == PC_OK ? name + " = " + std::to_string(payload["value"].get<int>())
                 : name + " inconclusive: " + std::to_string(payload["lower"].get<int>()) +
                       " <= " + name + (payload["upper"].get<int>() > 0
                                            ? " <= " + std::to_string(payload["upper"].get<int>())
                                            : std::string());
  return run.finish(s == PC_OK ? kSuccess : kInconclusive, payload, human, evidence_of(payload));
}

int cmd_sample(Run& run, const Global& gl, const std::string& graph, int k,
               std::uint64_t trials) {
  GraphPtr g = run.load_graph(graph);
  char* out = nullptr;
  pc_status s = pc_sample(g.get(), k, trials, gl.seed, gl.jobs, &out);
  run.check(s, "sample");
  json payload = json::parse(take(out));
  std::string human = std::to_string(payload["failed"].get<std::uint64_t>()) + " of " +
                      std::to_string(trials) + " random " + std::to_string(k) +
                      "-colorings fail to be proper connected";
  return run.finish(s == PC_OK ? kSuccess : kPropertyFailed, payload, human,
                    evidence_of(payload));
}

int cmd_color(Run& run, const std::string& graph, const std::string& method, bool explain,
              const std::string& out_path) {
  GraphPtr g = run.load_graph(graph);
  char* out = nullptr;
  pc_coloring* raw = nullptr;
  pc_status s = pc_color(g.get(), method.c_str(), explain ? 1 : 0, &out, &raw);
  ColoringPtr c(raw);
  run.check(s, "color");
  json payload = json::parse(take(out));
  std::string coloring = payload["coloring"].dump();
  if (!out_path.empty()) write_file(out_path, coloring + "\n");
  std::string human = coloring;
  if (explain && payload.contains("decomposition"))
    human = payload["decomposition"].dump(2) + "\n" + coloring;
  return run.finish(kSuccess, payload, human, evidence_of(payload));
}

int cmd_verify(Run& run, const std::string& graph, const std::string& coloring_path,
               bool strong) {
  GraphPtr g = run.load_graph(graph);
  std::string text = read_file(coloring_path);
  run.input("coloring", coloring_path, text);
  pc_coloring* raw = nullptr;
  run.check(pc_coloring_parse(g.get(), text.c_str(), &raw), coloring_path);
  ColoringPtr c(raw);
  char* out = nullptr;
  pc_status s = pc_verify(g.get(), c.get(), strong ? 1 : 0, &out);
  run.check(s, "verify");
  json payload = json::parse(take(out));
  std::string human;
  if (!payload["proper_connected"].get<bool>()) {
    human = "not proper connected: no proper path between " + pair_text(payload["failing_pair"]);
  } else if (strong && !payload["strong"].get<bool>()) {
    human = "proper connected, strong property fails at " +
            pair_text(payload["strong_failing_pair"]);
  } else {
    human = strong ? "proper connected with the strong property" : "proper connected";
  }
  return run.finish(s == PC_OK ? kSuccess : kPropertyFailed, payload, human,
                    evidence_of(payload));
}

int cmd_gen(Run& run, const std::string& variant, int scale, const std::string& graph_out,
            const std::string& spec_out) {
  pc_graph* graw = nullptr;
  pc_gadget* sraw = nullptr;
  run.check(pc_gen_counterexample(variant.c_str(), scale, &graw, &sraw), "gen");
  GraphPtr g(graw);
  GadgetPtr spec(sraw);
  char* text = nullptr;
  run.check(pc_graph_format(g.get(), PC_FORMAT_EDGELIST, &text), "gen");
  std::string graph_text = take(text);
  run.check(pc_gadget_to_json(spec.get(), &text), "gen");
  std::string spec_text = take(text) + "\n";
  if (!graph_out.empty()) write_file(graph_out, graph_text);
  if (!spec_out.empty()) write_file(spec_out, spec_text);
  char* out = nullptr;
  pc_status s = pc_verify_gadget(g.get(), spec.get(), &out);
  run.check(s, "gen");
  json payload = {{"variant", variant},
                  {"scale", scale},
                  {"order", pc_graph_order(g.get())},
                  {"size", pc_graph_size(g.get())},
                  {"graph_fnv1a64", fnv1a(graph_text)},
                  {"spec_fnv1a64", fnv1a(spec_text)},
                  {"structure", json::parse(take(out))}};
  std::string human = variant + " scale " + std::to_string(scale) + ": " +
                      std::to_string(pc_graph_order(g.get())) + " vertices, " +
                      std::to_string(pc_graph_size(g.get())) + " edges, structure " +
                      (s == PC_OK ? "verified" : "FAILED");
  if (graph_out.empty()) human = graph_text + human;
  return run.finish(s == PC_OK ? kSuccess : kPropertyFailed, payload, human);
}

int cmd_refute(Run& run, const Global& gl, const std::string& graph, const std::string& spec_path,
               std::uint64_t trials, const std::string& coloring_path,
               const std::string& report_path) {
  GraphPtr g = run.load_graph(graph);
  std::string spec_text = read_file(spec_path);
  run.input("spec", spec_path, spec_text);
  pc_gadget* sraw = nullptr;
  run.check(pc_gadget_parse(spec_text.c_str(), &sraw), spec_path);
  GadgetPtr spec(sraw);
  char* out = nullptr;
  pc_status structure = pc_verify_gadget(g.get(), spec.get(), &out);
  run.check(structure, "refute");
  json structure_json = json::parse(take(out));
  if (structure != PC_OK) throw InputError{"graph does not match the gadget spec"};
  pc_status s;
  json payload;
  std::string human;
  if (!coloring_path.empty()) {
    std::string text = read_file(coloring_path);
    run.input("coloring", coloring_path, text);
    pc_coloring* raw = nullptr;
    run.check(pc_coloring_parse(g.get(), text.c_str(), &raw), coloring_path);
    ColoringPtr c(raw);
    s = pc_refute_coloring(g.get(), spec.get(), c.get(), &out);
    run.check(s, "refute");
    payload = json::parse(take(out));
    human = s == PC_OK ? "refuted: no proper path between " +
                             pair_text(payload["witness"]["pair"])
                       : "NOT refuted: " + payload["event"].get<std::string>();
  } else {
    s = pc_refute(g.get(), spec.get(), trials, gl.seed, gl.jobs, &out);
    run.check(s, "refute");
    payload = json::parse(take(out));
    human = std::to_string(payload["defeated"].get<std::uint64_t>()) + " of " +
            std::to_string(trials) + " random 2-colorings refuted with verified witnesses (" +
            std::to_string(payload["direct"].get<std::uint64_t>()) + " direct, " +
            std::to_string(payload["structural"].get<std::uint64_t>()) + " structural)";
  }
  payload["structure"] = structure_json;
  int code = run.finish(s == PC_OK ? kSuccess : kPropertyFailed, payload, human,
                        json::array({"sampled_refutation"}));
  if (!report_path.empty()) write_file(report_path, run.report_text());
  return code;
}

int cmd_info(Run& run, const std::string& graph) {
  GraphPtr g = run.load_graph(graph);
  char* out = nullptr;
  run.check(pc_graph_info(g.get(), &out), "info");
  json payload = json::parse(take(out));
  return run.finish(kSuccess, payload, payload.dump(2));
}

std::string echo(int argc, char** argv) {
  std::string s = "pc";
  for (int i = 1; i < argc; ++i) s += std::string(" ") + argv[i];
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proper-connection colorings: exact values, constructions and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  Global gl;
  app.add_option("--format", gl.format, "Graph input format")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
  app.add_flag("--json", gl.json_output, "Print the full JSON run report");
  app.add_option("--seed", gl.seed, "Random seed");
  app.add_option("--jobs", gl.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget-nodes", gl.budget_nodes, "Search node budget for exact runs");
  app.add_flag("--deterministic", gl.deterministic, "Zero the wall time so reports are stable");

  std::string graph;
  std::string second;
  int kmax = 4;
  bool strong = false;
  auto* exact = app.add_subcommand("exact", "Exact proper connection number");
  exact->add_option("graph", graph, "Graph file or named:<name>")->required();
  exact->add_option("--kmax", kmax, "Largest k to try")->check(CLI::Range(1, 31));
  exact->add_flag("--strong", strong, "Require the strong property");

  int k = 2;
  std::uint64_t trials = 1000;
  auto* sample = app.add_subcommand(
      "sample", "Sample random k-colorings; exit 0 when none is proper connected");
  sample->add_option("graph", graph, "Graph file or named:<name>")->required();
  sample->add_option("-k", k, "Number of colors")->check(CLI::Range(1, 31));
  sample->add_option("-t,--trials", trials, "Number of trials");

  std::string method;
  bool explain = false;
  std::string out_path;
  auto* color = app.add_subcommand("color", "Construct a proper-path coloring");
  color->add_option("graph", graph, "Graph file or named:<name>")->required();
  color->add_option("--method", method, "Construction")
      ->required()
      ->check(CLI::IsMember({"diam3", "3ec", "bipartite", "2conn"}));
  color->add_flag("--explain", explain, "Include the case decomposition");
  color->add_option("-o,--output", out_path, "Write the coloring JSON here");

  auto* verify = app.add_subcommand("verify", "Check a coloring");
  verify->add_option("graph", graph, "Graph file or named:<name>")->required();
  verify->add_option("coloring", second, "Coloring JSON file")->required();
  verify->add_flag("--strong", strong, "Also check the strong property");

  std::string variant;
  int scale = 1;
  std::string spec_path;
  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  auto* counter = gen->add_subcommand("counterexample", "Counterexample family member");
  counter->add_option("--variant", variant, "Block kind")
      ->required()
      ->check(CLI::IsMember({"k33", "mini"}));
  counter->add_option("--scale", scale, "Scale")->check(CLI::PositiveNumber);
  counter->add_option("-o,--output", out_path, "Graph output file (edge list)");
  counter->add_option("--spec", spec_path, "Gadget spec output file (JSON)");

  std::string report_path;
  std::string coloring_path;
  auto* refute = app.add_subcommand("refute", "Refute 2-colorings of a family member");
  refute->add_option("graph", graph, "Graph file")->required();
  refute->add_option("spec", second, "Gadget spec JSON")->required();
  refute->add_option("--trials", trials, "Number of random 2-colorings");
  refute->add_option("--coloring", coloring_path, "Refute this coloring instead of sampling");
  refute->add_option("--report", report_path, "Write the JSON run report here");

  auto* info = app.add_subcommand("info", "Basic graph invariants");
  info->add_option("graph", graph, "Graph file or named:<name>")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kSuccess : kInputError;
  }

  Run run(gl, echo(argc, argv));
  try {
    if (*exact) return cmd_exact(run, gl, graph, kmax, strong);
    if (*sample) return cmd_sample(run, gl, graph, k, trials);
    if (*color) return cmd_color(run, graph, method, explain, out_path);
    if (*verify) return cmd_verify(run, graph, second, strong);
    if (*gen) return cmd_gen(run, variant, scale, out_path, spec_path);
    if (*refute)
      return cmd_refute(run, gl, graph, second, trials, coloring_path, report_path);
    if (*info) return cmd_info(run, graph);
  } catch (const InputError& e) {
    std::cerr << "pc: " << e.message << "\n";
    return run.internal() ? kPropertyFailed : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "pc: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
