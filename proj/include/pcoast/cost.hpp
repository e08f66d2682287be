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

#ifndef PCOAST_COST_HPP
#define PCOAST_COST_HPP

#include <cstddef>

#include "pcoast/frame.hpp"
#include "pcoast/nodes.hpp"

namespace pcoast {

/// [[lambda(P,X_i), lambda(P,Z_i)], [lambda(Q,X_i), lambda(Q,Z_i)]] over GF(2).
struct LocalSupport {
  bool px = false;
  bool pz = false;
  bool qx = false;
  bool qz = false;

  bool det() const { return (px && qz) != (pz && qx); }
  bool nonzero() const { return px || pz || qx || qz; }
  bool operator==(const LocalSupport&) const = default;
};

enum class SupportClass { None, Weak, Strong };

LocalSupport local_support(Letter p, Letter q);
LocalSupport local_support(const Pauli& p, const Pauli& q, std::size_t i);
SupportClass support_class(const LocalSupport& s);
SupportClass support_class(const Pauli& p, const Pauli& q, std::size_t i);

/// weight - 1; zero for weight <= 1.
std::size_t singlet_cost(const Pauli& p);
/// (sum of local determinants - 1)/2 + (number of supported qubits - 1).
std::size_t factor_cost(const Pauli& p, const Pauli& q);
/// Singlet cost for rotations and measurements, factor cost for preparations.
/// Throws std::invalid_argument for frame and mu nodes.
std::size_t node_cost(const Node& n);
/// Sum of factor costs over the rows read as local frames.
std::size_t frame_cost(const PauliFrame& f);

}  // namespace pcoast

#endif  // PCOAST_COST_HPP
