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

#ifndef PCOAST_SIM_HPP
#define PCOAST_SIM_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pcoast/circuit.hpp"
#include "pcoast/graph.hpp"
#include "pcoast/nodes.hpp"

namespace pcoast {

using Matrix = Eigen::MatrixXcd;

inline constexpr std::size_t kSimMaxQubits = 8;
/// Live-branch cap: twelve binary branchings.
inline constexpr std::size_t kSimMaxBranches = std::size_t{1} << 12;
inline constexpr double kSimPruneTrace = 1e-12;

class SimCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Classical-quantum state: one partial density matrix per assignment.
struct CqState {
  std::size_t n_qubits = 0;
  std::map<Assignment, Matrix> branches;

  double trace() const;
  std::string str() const;
};

enum class InitialState { MaximallyMixed, Zero };

CqState initial_state(std::size_t n_qubits, InitialState kind = InitialState::MaximallyMixed);
CqState state_from_density(std::size_t n_qubits, const Matrix& rho);
/// Full-rank random density matrix (Ginibre A A^dag, normalized).
Matrix random_density(std::size_t n_qubits, std::mt19937_64& rng);

/// Matrix of a Pauli; Y carries its own i, so i^k X^x Z^z i^#Y.
Matrix pauli_matrix(const Pauli& p);
/// exp(-i theta/2 P) = cos(theta/2) I - i sin(theta/2) P.
Matrix rotation_matrix(const Pauli& p, double theta);
/// A unitary U with U^dag P U = f.lookup(P); fixed up to global phase.
Matrix frame_unitary(const PauliFrame& f);

void apply_node(CqState& s, const Node& n);
CqState run_nodes(CqState s, const std::vector<Node>& nodes);
CqState run_circuit(const Circuit& c, CqState init);
CqState run_circuit(const Circuit& c, InitialState kind = InitialState::MaximallyMixed);
/// Graph in topological order, then the terminal frame, then mu.
CqState run_program(const CompiledProgram& prog, CqState init);
CqState run_program(const CompiledProgram& prog, InitialState kind = InitialState::MaximallyMixed);

/// Sums branches that agree on the kept variables.
CqState marginalize(const CqState& s, const std::function<bool(Cvar)>& keep);

bool equiv_hold(const CqState& a, const CqState& b, double tol = 1e-9);
bool equiv_release(const CqState& a, const CqState& b, double tol = 1e-9);
/// Largest entrywise (hold) or trace (release) deviation over the union of assignments.
double hold_deviation(const CqState& a, const CqState& b);
double release_deviation(const CqState& a, const CqState& b);

/// A term as a cq-channel.
using Channel = std::function<CqState(const CqState&)>;

struct EquivalenceReport {
  bool equivalent = true;
  double max_deviation = 0.0;
  std::size_t states_checked = 0;
};

/// Compares two channels on |0..0>, the maximally mixed state and `random_states`
/// random full-rank states. Both outputs are marginalized onto cvars below n_user_cvars.
EquivalenceReport check_equivalent(std::size_t n_qubits, Cvar n_user_cvars, const Channel& a, const Channel& b,
                                   Outcome outcome, std::uint64_t seed = 1, std::size_t random_states = 2,
                                   double tol = 1e-9);

}  // namespace pcoast

#endif  // PCOAST_SIM_HPP
