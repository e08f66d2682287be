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

#ifndef PCOAST_CIRCUIT_HPP
#define PCOAST_CIRCUIT_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pcoast/nodes.hpp"

namespace pcoast {

enum class GateKind { PrepZ, PrepX, MeasZ, H, S, Sdg, X, Y, Z, T, Tdg, RX, RY, RZ, RXY, CNOT, CZ, SWAP, TQE };

struct Gate {
  GateKind kind = GateKind::H;
  std::vector<std::size_t> qubits;
  std::vector<double> angles;
  Cvar cvar = 0;              // MeasZ target
  Letter sigma1 = Letter::Z;  // TQE bases
  Letter sigma2 = Letter::X;

  bool operator==(const Gate&) const = default;
};

struct Circuit {
  std::size_t n_qubits = 0;
  std::size_t n_cvars = 0;
  std::vector<Gate> gates;

  bool operator==(const Circuit&) const = default;
};

class CircuitParseError : public std::runtime_error {
 public:
  CircuitParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

std::string_view gate_name(GateKind k);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
std::size_t gate_arity(GateKind k);
std::size_t gate_angle_count(GateKind k);

/// Builders that validate arity.
Gate make_gate(GateKind k, std::vector<std::size_t> qubits, std::vector<double> angles = {});
Gate make_measz(std::size_t q, Cvar c);
Gate make_tqe(Letter s1, Letter s2, std::size_t i, std::size_t j);

/// Evaluates "pi/4", "-3*pi/2", "0.25", "2*(pi-1)" and the like.
double parse_angle(std::string_view text);

Circuit parse_circuit(std::string_view text);
std::string emit_circuit(const Circuit& c);

struct Metrics {
  std::size_t total_gates = 0;
  std::size_t two_qubit_gates = 0;
  std::size_t depth = 0;
  std::size_t measurements = 0;
  std::size_t preparations = 0;

  bool operator==(const Metrics&) const = default;
};

Metrics metrics(const Circuit& c);

/// Gate as a node sequence on an n-qubit register.
std::vector<Node> lower_gate(const Gate& g, std::size_t n_qubits);
/// The Clifford gate as a frame, or nothing for non-Clifford kinds.
std::optional<PauliFrame> gate_frame(const Gate& g, std::size_t n_qubits);

}  // namespace pcoast

#endif  // PCOAST_CIRCUIT_HPP
