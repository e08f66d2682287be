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

#ifndef PCOAST_FRAME_HPP
#define PCOAST_FRAME_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcoast/pauli.hpp"

namespace pcoast {

/// A Clifford unitary U stored by its inverse conjugation table:
/// row j holds (U^dag Z_j U, U^dag X_j U).
class PauliFrame {
 public:
  PauliFrame() = default;
  static PauliFrame identity(std::size_t n_qubits);
  /// Rows are taken as given; check is_wellformed() if unsure.
  static PauliFrame from_rows(std::vector<std::pair<Pauli, Pauli>> rows);

  std::size_t n_qubits() const { return rows_.size(); }
  const Pauli& eff_z(std::size_t q) const { return rows_[q].first; }
  const Pauli& eff_x(std::size_t q) const { return rows_[q].second; }
  Pauli eff_y(std::size_t q) const;
  const std::vector<std::pair<Pauli, Pauli>>& rows() const { return rows_; }
  void set_row(std::size_t q, Pauli eff_z, Pauli eff_x);

  /// U^dag P U, phase exact. P must be Hermitian.
  Pauli lookup(const Pauli& p) const;
  bool fixes(const Pauli& q) const { return lookup(q) == q; }

  bool is_identity() const;
  bool is_wellformed() const;

  bool operator==(const PauliFrame& other) const { return rows_ == other.rows_; }
  bool operator!=(const PauliFrame& other) const { return !(*this == other); }

  /// Two-column rendering, one "[effZ, effX]" row per qubit.
  std::string str() const;

 private:
  std::vector<std::pair<Pauli, Pauli>> rows_;
};

/// compose(f2, f1) has U = U2 * U1, so lookup(compose(f2,f1), P) = f1(f2(P)).
PauliFrame compose(const PauliFrame& f2, const PauliFrame& f1);
PauliFrame inverse(const PauliFrame& f);

/// Frame of the Clifford 1/2 (I + A + B - AB) for commuting Hermitian A, B.
/// The TQE gates, CNOT and CZ are all of this form.
PauliFrame controlled_pauli_frame(const Pauli& a, const Pauli& b);
/// Inverse conjugation of q by that same Clifford.
Pauli controlled_pauli_lookup(const Pauli& q, const Pauli& a, const Pauli& b);

/// Frame for a product of Pauli operators P (conjugation flips anticommuting entries).
PauliFrame pauli_gate_frame(const Pauli& p);
/// Frame for exp(-i k pi/4 P), i.e. a rotation by k quarter turns.
PauliFrame rotation_frame(const Pauli& p, int quarter_turns);
/// Frame of the relabeling that carries the state of qubit perm[j] onto qubit j.
PauliFrame permutation_frame(const std::vector<std::size_t>& perm);

/// If theta is a multiple of pi/2 (within 1e-12 in units of pi/2), the multiple mod 4.
std::optional<int> clifford_quarter_turns(double theta);

enum class CliffordKind { H, S, Sdg, X, Y, Z, CNOT, CZ, SWAP, TQE, PauliGate, Rot };

struct CliffordGate {
  CliffordKind kind = CliffordKind::H;
  std::vector<std::size_t> qubits;
  Letter sigma1 = Letter::Z;  // TQE only
  Letter sigma2 = Letter::X;  // TQE only
  Pauli pauli;                // PauliGate / Rot
  double angle = 0.0;         // Rot
};

/// Frame for a supported Clifford gate on an n-qubit register.
PauliFrame from_gate(const CliffordGate& g, std::size_t n_qubits);

}  // namespace pcoast

#endif  // PCOAST_FRAME_HPP
