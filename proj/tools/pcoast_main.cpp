// Copyright 2026 The pcoast Authors
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

// pcoast command-line driver: opt and bench subcommands.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcoast/bench.hpp"
#include "pcoast/pipeline.hpp"

namespace {

using json = nlohmann::json;
using namespace pcoast;

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kVerify = 3, kInternal = 4 };

struct Common {
  std::string outcome = "hold";
  std::string gateset = "generic";
  double credit = 1.0;
  bool free_node_weighting = false;
  bool emit_swaps = false;
  bool verify = false;
  std::uint64_t seed = 1;
  std::string stats;
  bool trace = false;
  bool inject_fault = false;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--outcome", c.outcome, "hold or release")->check(CLI::IsMember({"hold", "release"}));
  app->add_option("--gateset", c.gateset, "generic or native")->check(CLI::IsMember({"generic", "native"}));
  app->add_option("--credit", c.credit, "parallelization credit")->check(CLI::NonNegativeNumber);
  app->add_flag("--free-node-weighting", c.free_node_weighting, "weight dependency-free nodes by |G|/|BEGIN|");
  app->add_flag("--emit-swaps", c.emit_swaps, "materialize the qubit permutation as SWAP gates");
  app->add_flag("--verify", c.verify, "check the result against the dense oracle (n <= 8)");
  app->add_option("--seed", c.seed, "seed for random instances and oracle states");
  app->add_option("--stats", c.stats, "write the JSON report here instead of stdout");
  app->add_flag("--trace", c.trace, "log every rewrite to stderr");
  app->add_flag("--inject-fault", c.inject_fault)->group("");
}

Outcome outcome_of(const Common& c) { return c.outcome == "release" ? Outcome::Release : Outcome::Hold; }

SearchConfig config_of(const Common& c) {
  SearchConfig cfg;
  cfg.parallelization_credit = c.credit;
  cfg.free_node_weighting = c.free_node_weighting;
  cfg.gateset = c.gateset == "native" ? GateSet::Native : GateSet::Generic;
  cfg.rng_seed = c.seed;
  cfg.emit_swaps = c.emit_swaps;
  return cfg;
}

json metrics_json(const Metrics& m) {
  return json{{"total_gates", m.total_gates},
              {"two_qubit_gates", m.two_qubit_gates},
              {"depth", m.depth},
              {"measurements", m.measurements},
              {"preparations", m.preparations}};
}

// Deliberate corruption used to exercise --verify.
void corrupt(CompiledProgram& prog) {
  for (NodeId id : prog.graph.ids()) {
    const Node& n = prog.graph.node(id);
    if (n.is_rotation()) {
      prog.graph.set_node_same_commutation(id, Node(Rotation{n.as_rotation().axis, n.as_rotation().theta + 1.0}));
      return;
    }
  }
  if (!prog.mu.empty()) {
    const MsfAssignment a = prog.mu.assignments().front();
    prog.mu.set(a.target, a.sources, !a.constant);
    return;
  }
  PauliFrame f = prog.frame;
  f.set_row(0, f.eff_z(0).negated(), f.eff_x(0));
  prog.frame = f;
}

struct Run {
  PipelineResult result;
  std::vector<std::string> violations;
};

Run run(const Circuit& input, const Common& c) {
  TraceFn trace;
  if (c.trace) trace = [](std::string_view line) { std::cerr << "[pass] " << line << "\n"; };
  Run r;
  PipelineResult& p = r.result;
  p.input_metrics = metrics(input);
  auto t0 = std::chrono::steady_clock::now();
  p.compiled = circuit_to_graph(input);
  auto t1 = std::chrono::steady_clock::now();
  p.optimized = optimize(p.compiled, outcome_of(c), trace);
  if (c.inject_fault) corrupt(p.optimized);
  auto t2 = std::chrono::steady_clock::now();
  for (const std::string& v : check_invariants(p.compiled)) r.violations.push_back("compiled: " + v);
  for (const std::string& v : check_invariants(p.optimized)) r.violations.push_back("optimized: " + v);
  p.synthesis = synthesize(p.optimized, outcome_of(c), config_of(c));
  auto t3 = std::chrono::steady_clock::now();
  p.output_metrics = metrics(p.synthesis.circuit);
  auto ms = [](auto a, auto b) { return std::chrono::duration<double, std::milli>(b - a).count(); };
  p.timings = PassTimings{ms(t0, t1), ms(t1, t2), ms(t2, t3)};
  return r;
}

json report(const Run& r, const Common& c, const std::string& source) {
  const PipelineResult& p = r.result;
  json perm = json::array();
  for (std::size_t k : p.synthesis.permutation) perm.push_back(k);
  return json{{"input", source},
              {"outcome", c.outcome},
              {"config",
               {{"gateset", c.gateset},
                {"credit", c.credit},
                {"free_node_weighting", c.free_node_weighting},
                {"emit_swaps", c.emit_swaps},
                {"seed", c.seed}}},
              {"input_metrics", metrics_json(p.input_metrics)},
              {"output_metrics", metrics_json(p.output_metrics)},
              {"graph_nodes", p.optimized.graph.size()},
              {"tqe_gates", p.synthesis.tqe_count},
              {"mu", p.synthesis.mu.str()},
              {"permutation", perm},
              {"timings_ms",
               {{"compile", p.timings.compile_ms},
                {"optimize", p.timings.optimize_ms},
                {"synthesize", p.timings.synthesize_ms}}}};
}

int verify_into(const Circuit& input, const Run& r, const Common& c, json& rep) {
  try {
    EquivalenceReport v = verify_synthesis(input, r.result.synthesis, outcome_of(c), c.seed);
    rep["verify"] = {{"equivalent", v.equivalent}, {"max_deviation", v.max_deviation}, {"states", v.states_checked}};
    if (!v.equivalent) {
      std::cerr << "pcoast: verification failed, deviation " << v.max_deviation << "\n";
      return kVerify;
    }
  } catch (const SimCapError& e) {
    std::cerr << "pcoast: --verify unavailable: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

bool write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

int finish(const json& rep, const Common& c) {
  if (c.stats.empty()) {
    std::cout << rep.dump(2) << "\n";
  } else if (!write_text(c.stats, rep.dump(2) + "\n")) {
    std::cerr << "pcoast: cannot write " << c.stats << "\n";
    return kUsage;
  }
  return kOk;
}

int cmd_opt(const std::string& in, const std::string& out_path, const std::string& dump_graph, const Common& c) {
  std::ifstream f(in);
  if (!f) {
    std::cerr << "pcoast: cannot read " << in << "\n";
    return kParse;
  }
  std::stringstream ss;
  ss << f.rdbuf();
  Circuit input;
  try {
    input = parse_circuit(ss.str());
  } catch (const CircuitParseError& e) {
    std::cerr << in << ": " << e.what() << "\n";
    return kParse;
  }
  Run r = run(input, c);
  if (!r.violations.empty()) {
    for (const std::string& v : r.violations) std::cerr << "pcoast: invariant violation: " << v << "\n";
    return kInternal;
  }
  if (!dump_graph.empty() && !write_text(dump_graph, r.result.optimized.graph.dump())) {
    std::cerr << "pcoast: cannot write " << dump_graph << "\n";
    return kUsage;
  }
  std::string text = render_output(r.result.synthesis);
  if (out_path.empty()) {
    std::cout << text;
  } else if (!write_text(out_path, text)) {
    std::cerr << "pcoast: cannot write " << out_path << "\n";
    return kUsage;
  }
  json rep = report(r, c, in);
  int code = c.verify ? verify_into(input, r, c, rep) : kOk;
  if (out_path.empty() && c.stats.empty()) return code;  // circuit already on stdout
  int fin = finish(rep, c);
  return code != kOk ? code : fin;
}

int cmd_bench(const std::string& family, std::size_t n, std::size_t layers, std::size_t gates,
              const std::string& format, const Common& c) {
  Circuit input;
  try {
    input = bench_family(family, n, layers, gates, c.seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "pcoast: " << e.what() << "\n";
    return kUsage;
  }
  Run r = run(input, c);
  if (!r.violations.empty()) {
    for (const std::string& v : r.violations) std::cerr << "pcoast: invariant violation: " << v << "\n";
    return kInternal;
  }
  json rep = report(r, c, family);
  rep["n"] = n;
  int code = c.verify ? verify_into(input, r, c, rep) : kOk;
  if (format == "json") {
    int fin = finish(rep, c);
    return code != kOk ? code : fin;
  }
  const Metrics& a = r.result.input_metrics;
  const Metrics& b = r.result.output_metrics;
  std::ostringstream row;
  row << "family,n,outcome,gateset,in_total,in_2q,in_depth,out_total,out_2q,out_depth,seconds\n";
  double secs = (r.result.timings.compile_ms + r.result.timings.optimize_ms + r.result.timings.synthesize_ms) / 1000;
  row << family << "," << n << "," << c.outcome << "," << c.gateset << "," << a.total_gates << ","
      << a.two_qubit_gates << "," << a.depth << "," << b.total_gates << "," << b.two_qubit_gates << "," << b.depth
      << "," << secs << "\n";
  if (c.stats.empty()) {
    std::cout << row.str();
  } else if (!write_text(c.stats, row.str())) {
    std::cerr << "pcoast: cannot write " << c.stats << "\n";
    return kUsage;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pcoast: Pauli-graph optimizing compiler for mixed unitary/measurement circuits"};
  app.require_subcommand(1);

  Common opt_common;
  std::string in, out, dump_graph;
  CLI::App* opt = app.add_subcommand("opt", "optimize and resynthesize a circuit file");
  opt->add_option("--in", in, "input circuit")->required();
  opt->add_option("--out", out, "output circuit (stdout if omitted)");
  opt->add_option("--dump-graph", dump_graph, "write the optimized graph dump here");
  add_common(opt, opt_common);

  Common bench_common;
  std::string family, format = "csv";
  std::size_t n = 4, layers = 2, gates = 30;
  CLI::App* bench = app.add_subcommand("bench", "run the pipeline on a generated benchmark instance");
  bench->add_option("family", family, "qft, grover, hea, qaoa or random")
      ->required()
      ->check(CLI::IsMember(bench_families()));
  bench->add_option("--n", n, "qubits")->check(CLI::PositiveNumber);
  bench->add_option("--layers", layers, "ansatz layers / QAOA rounds");
  bench->add_option("--gates", gates, "gate count for random circuits");
  bench->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_common(bench, bench_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (opt->parsed()) return cmd_opt(in, out, dump_graph, opt_common);
    return cmd_bench(family, n, layers, gates, format, bench_common);
  } catch (const WidthError& e) {
    std::cerr << "pcoast: " << e.what() << "\n";
    return kParse;
  } catch (const std::logic_error& e) {
    std::cerr << "pcoast: internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "pcoast: " << e.what() << "\n";
    return kInternal;
  }
}
