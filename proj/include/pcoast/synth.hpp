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

#ifndef PCOAST_SYNTH_HPP
#define PCOAST_SYNTH_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pcoast/circuit.hpp"
#include "pcoast/cost.hpp"
#include "pcoast/graph.hpp"

namespace pcoast {

/// Two-qubit entangler controlled_pauli(sigma1_i, sigma2_j). Self-inverse.
struct TqeGate {
  std::size_t i = 0;
  std::size_t j = 1;
  Letter sigma1 = Letter::Z;
  Letter sigma2 = Letter::X;

  auto operator<=>(const TqeGate&) const = default;
  std::string str() const;
};

/// The nine gates on the unordered pair {i, j}, i < j, in (sigma1, sigma2) order X, Y, Z.
std::vector<TqeGate> tqe_gates_on(std::size_t i, std::size_t j);
/// Letters at (i, j) after conjugation; phases dropped.
std::pair<Letter, Letter> tqe_letters(const TqeGate& g, Letter at_i, Letter at_j);
/// Exact conjugation of p by the gate.
Pauli apply_tqe(const TqeGate& g, const Pauli& p);
PauliFrame tqe_frame(const TqeGate& g, std::size_t n_qubits);

/// Gates on the pair that strictly lower the singlet's support.
std::vector<TqeGate> singlet_pair_gates(const Pauli& p, std::size_t i, std::size_t j);
/// Gates on the pair taking strong-strong to weak-weak or strong-weak to strong-none.
std::vector<TqeGate> factor_pair_gates(const Pauli& p, const Pauli& q, std::size_t i, std::size_t j);
std::vector<TqeGate> reduce_singlet(const Pauli& p);
std::vector<TqeGate> reduce_factor(const Pauli& p, const Pauli& q);
/// Sorted, de-duplicated; throws std::invalid_argument for cost-0 nodes.
std::vector<TqeGate> reduce_node(const Node& n);

enum class GateSet { Generic, Native };

struct SearchConfig {
  double parallelization_credit = 1.0;
  bool free_node_weighting = false;
  GateSet gateset = GateSet::Generic;
  std::uint64_t rng_seed = 1;
  bool emit_swaps = false;
};

/// Frame of a Clifford gate (RXY at Clifford angles included).
PauliFrame clifford_gate_frame(const Gate& g, std::size_t n_qubits);
/// Shortest single-qubit sequence on qubit q whose frame maps Z to z_image and X to x_image.
std::vector<Gate> local_clifford(GateSet set, std::size_t q, Letter z_image, bool z_negative, Letter x_image,
                                 bool x_negative);

struct SearchResult {
  Circuit circuit;
  PcoastGraph residual;
  PauliFrame frame;
};

/// Ultra-greedy search over the non-Clifford nodes; circuit;residual;frame equals graph;frame.
/// Release leaves the terminal commuting measurements in the residual.
SearchResult search_nonclifford(const PcoastGraph& g, const PauliFrame& f, Outcome outcome,
                                const SearchConfig& cfg = {});

struct FrameSynthesis {
  Circuit circuit;
  std::vector<std::size_t> permutation;  // circuit then permutation_frame(permutation) equals the input
};

FrameSynthesis synthesize_frame(const PauliFrame& f, const SearchConfig& cfg = {});

struct Synthesis {
  Circuit circuit;
  Msf mu;
  std::vector<std::size_t> permutation;
  std::size_t tqe_count = 0;
  Cvar n_user_cvars = 0;  // mu targets at or above this are scratch
};

/// circuit; permutation_frame(permutation); mu is equivalent to the program under the outcome.
Synthesis synthesize(const CompiledProgram& prog, Outcome outcome, const SearchConfig& cfg = {});

/// Swaps whose composed frame is permutation_frame(perm), in application order.
std::vector<std::pair<std::size_t, std::size_t>> permutation_swaps(const std::vector<std::size_t>& perm);

}  // namespace pcoast

#endif  // PCOAST_SYNTH_HPP
