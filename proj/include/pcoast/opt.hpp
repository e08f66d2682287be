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

#ifndef PCOAST_OPT_HPP
#define PCOAST_OPT_HPP

#include <functional>
#include <string_view>
#include <vector>

#include "pcoast/graph.hpp"

namespace pcoast {

/// One line per rewrite.
using TraceFn = std::function<void(std::string_view)>;

/// Stabilizers of preparations with no anticommuting descendant, in node-id order.
/// These hold on the state that leaves the graph.
std::vector<Pauli> terminal_stabilizers(const CompiledProgram& prog);

/// Nodes that may be multiplied by the preparation's P_Z stabilizer: not an ancestor
/// of the preparation and no anticommuting descendant of it on the way.
std::vector<NodeId> stabilized_nodes(const PcoastGraph& g, NodeId prep);

/// Each pass returns true when it changed the program.
bool reduce_node_support(CompiledProgram& prog, const TraceFn& trace = {});
bool reduce_terminal_frame(CompiledProgram& prog, const TraceFn& trace = {});
bool release_prune(CompiledProgram& prog, const TraceFn& trace = {});
bool release_measurement_reduction(CompiledProgram& prog, const TraceFn& trace = {});

/// Runs the pass list for the outcome until nothing changes.
CompiledProgram optimize(CompiledProgram prog, Outcome outcome, const TraceFn& trace = {});

/// Quantum measurement count and summed measurement weight.
struct MeasurementLoad {
  std::size_t count = 0;
  std::size_t weight = 0;
};
MeasurementLoad measurement_load(const PcoastGraph& g);

}  // namespace pcoast

#endif  // PCOAST_OPT_HPP
