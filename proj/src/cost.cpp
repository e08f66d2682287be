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

#include "pcoast/cost.hpp"

#include <bit>
#include <stdexcept>

namespace pcoast {

// lambda(L, X) is the z bit of L, lambda(L, Z) the x bit.
LocalSupport local_support(Letter p, Letter q) {
  auto up = static_cast<unsigned>(p), uq = static_cast<unsigned>(q);
  return LocalSupport{(up >> 1) != 0, (up & 1u) != 0, (uq >> 1) != 0, (uq & 1u) != 0};
}

LocalSupport local_support(const Pauli& p, const Pauli& q, std::size_t i) {
  return local_support(p.letter(i), q.letter(i));
}

SupportClass support_class(const LocalSupport& s) {
  if (s.det()) return SupportClass::Strong;
  return s.nonzero() ? SupportClass::Weak : SupportClass::None;
}

SupportClass support_class(const Pauli& p, const Pauli& q, std::size_t i) {
  return support_class(local_support(p, q, i));
}

std::size_t singlet_cost(const Pauli& p) {
  std::size_t w = p.weight();
  return w == 0 ? 0 : w - 1;
}

std::size_t factor_cost(const Pauli& p, const Pauli& q) {
  require_same_width(p.n_qubits(), q.n_qubits(), "factor_cost");
  std::size_t dets = 0, supported = 0;
  const auto& px = p.x_words();
  const auto& pz = p.z_words();
  const auto& qx = q.x_words();
  const auto& qz = q.z_words();
  for (std::size_t w = 0; w < px.size(); ++w) {
    dets += static_cast<std::size_t>(std::popcount((pz[w] & qx[w]) ^ (px[w] & qz[w])));
    supported += static_cast<std::size_t>(std::popcount(px[w] | pz[w] | qx[w] | qz[w]));
  }
  if (dets % 2 == 0) throw std::invalid_argument("factor_cost: Paulis commute");
  return (dets - 1) / 2 + (supported - 1);
}

std::size_t node_cost(const Node& n) {
  if (n.is_rotation()) return singlet_cost(n.as_rotation().axis);
  if (n.is_measurement()) return singlet_cost(n.as_measurement().axis);
  if (n.is_preparation()) return factor_cost(n.as_preparation().pz, n.as_preparation().px);
  throw std::invalid_argument("node_cost: frame and mu nodes have no node cost");
}

std::size_t frame_cost(const PauliFrame& f) {
  std::size_t total = 0;
  for (const auto& [z, x] : f.rows()) total += factor_cost(z, x);
  return total;
}

}  // namespace pcoast
