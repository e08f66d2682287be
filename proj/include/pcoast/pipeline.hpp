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

#ifndef PCOAST_PIPELINE_HPP
#define PCOAST_PIPELINE_HPP

#include <string>
#include <vector>

#include "pcoast/circuit.hpp"
#include "pcoast/graph.hpp"
#include "pcoast/opt.hpp"
#include "pcoast/sim.hpp"
#include "pcoast/synth.hpp"

namespace pcoast {

struct PassTimings {
  double compile_ms = 0;
  double optimize_ms = 0;
  double synthesize_ms = 0;
};

struct PipelineResult {
  CompiledProgram compiled;
  CompiledProgram optimized;
  Synthesis synthesis;
  Metrics input_metrics;
  Metrics output_metrics;
  PassTimings timings;
};

/// parse output -> compile -> optimize -> synthesize.
PipelineResult run_pipeline(const Circuit& input, Outcome outcome, const SearchConfig& cfg = {},
                            const TraceFn& trace = {});

Channel circuit_channel(const Circuit& c);
Channel program_channel(const CompiledProgram& prog);
/// Circuit, then the virtual permutation, then mu.
Channel synthesis_channel(const Synthesis& s);

/// Oracle comparison of the input with the synthesized output, marginalized onto user cvars.
EquivalenceReport verify_synthesis(const Circuit& input, const Synthesis& s, Outcome outcome, std::uint64_t seed = 1,
                                   double tol = 1e-9);

/// Output file text: the circuit, then "# <assignment>" lines for mu and a permutation line.
std::string render_output(const Synthesis& s);

}  // namespace pcoast

#endif  // PCOAST_PIPELINE_HPP
