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

#include "pcoast/pipeline.hpp"

#include <chrono>
#include <sstream>

namespace pcoast {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

bool is_identity_perm(const std::vector<std::size_t>& perm) {
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] != k) return false;
  }
  return true;
}

}  // namespace

PipelineResult run_pipeline(const Circuit& input, Outcome outcome, const SearchConfig& cfg, const TraceFn& trace) {
  PipelineResult r;
  r.input_metrics = metrics(input);
  auto t0 = std::chrono::steady_clock::now();
  r.compiled = circuit_to_graph(input);
  r.timings.compile_ms = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  r.optimized = optimize(r.compiled, outcome, trace);
  r.timings.optimize_ms = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  r.synthesis = synthesize(r.optimized, outcome, cfg);
  r.timings.synthesize_ms = ms_since(t0);
  r.output_metrics = metrics(r.synthesis.circuit);
  return r;
}

Channel circuit_channel(const Circuit& c) {
  return [c](const CqState& s) { return run_circuit(c, s); };
}

Channel program_channel(const CompiledProgram& prog) {
  return [prog](const CqState& s) { return run_program(prog, s); };
}

Channel synthesis_channel(const Synthesis& syn) {
  return [syn](const CqState& s) {
    CqState out = run_circuit(syn.circuit, s);
    if (!is_identity_perm(syn.permutation)) apply_node(out, Node::frame(permutation_frame(syn.permutation)));
    apply_node(out, Node::msf(syn.mu));
    return out;
  };
}

EquivalenceReport verify_synthesis(const Circuit& input, const Synthesis& s, Outcome outcome, std::uint64_t seed,
                                   double tol) {
  return check_equivalent(input.n_qubits, static_cast<Cvar>(input.n_cvars), circuit_channel(input),
                          synthesis_channel(s), outcome, seed, 2, tol);
}

std::string render_output(const Synthesis& s) {
  std::ostringstream out;
  out << emit_circuit(s.circuit);
  for (const MsfAssignment& a : s.mu.assignments()) {
    if (a.target >= s.n_user_cvars) continue;
    out << "# " << Msf::single(a.target, a.sources, a.constant).str() << "\n";
  }
  if (!is_identity_perm(s.permutation)) {
    out << "# permutation:";
    for (std::size_t p : s.permutation) out << " " << p;
    out << "\n";
  }
  return out.str();
}

}  // namespace pcoast
