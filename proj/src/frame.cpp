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

#include "pcoast/frame.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace pcoast {

PauliFrame PauliFrame::identity(std::size_t n_qubits) {
  PauliFrame f;
  f.rows_.reserve(n_qubits);
  for (std::size_t q = 0; q < n_qubits; ++q) {
    f.rows_.emplace_back(Pauli::single(n_qubits, q, Letter::Z), Pauli::single(n_qubits, q, Letter::X));
  }
  return f;
}

PauliFrame PauliFrame::from_rows(std::vector<std::pair<Pauli, Pauli>> rows) {
  for (const auto& [z, x] : rows) {
    require_same_width(z.n_qubits(), rows.size(), "PauliFrame row");
    require_same_width(x.n_qubits(), rows.size(), "PauliFrame row");
  }
  PauliFrame f;
  f.rows_ = std::move(rows);
  return f;
}

Pauli PauliFrame::eff_y(std::size_t q) const { return hermitian_product(rows_[q].first, rows_[q].second); }

void PauliFrame::set_row(std::size_t q, Pauli eff_z, Pauli eff_x) {
  require_same_width(eff_z.n_qubits(), n_qubits(), "set_row");
  require_same_width(eff_x.n_qubits(), n_qubits(), "set_row");
  rows_[q] = {std::move(eff_z), std::move(eff_x)};
}

Pauli PauliFrame::lookup(const Pauli& p) const {
  require_same_width(p.n_qubits(), n_qubits(), "lookup");
  if (!p.is_hermitian()) throw std::invalid_argument("lookup: non-Hermitian Pauli " + p.str());
  Pauli out(n_qubits());
  out.set_phase_exp(p.phase_exp());
  for (std::size_t q : p.support()) {
    switch (p.letter(q)) {
      case Letter::Z:
        out = mul(out, rows_[q].first);
        break;
      case Letter::X:
        out = mul(out, rows_[q].second);
        break;
      case Letter::Y:
        // Y = (-i) Z X
        out = mul(out, mul(rows_[q].first, rows_[q].second));
        out.set_phase_exp(out.phase_exp() + 3);
        break;
      case Letter::I:
        break;
    }
  }
  return out;
}

bool PauliFrame::is_identity() const { return *this == identity(n_qubits()); }

bool PauliFrame::is_wellformed() const {
  const std::size_t n = n_qubits();
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows_[i].first.is_hermitian() || !rows_[i].second.is_hermitian()) return false;
    if (rows_[i].first.is_identity() || rows_[i].second.is_identity()) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (commutator_lambda(rows_[i].first, rows_[j].first)) return false;
      if (commutator_lambda(rows_[i].second, rows_[j].second)) return false;
      if (commutator_lambda(rows_[i].first, rows_[j].second) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

std::string PauliFrame::str() const {
  std::ostringstream out;
  for (std::size_t q = 0; q < rows_.size(); ++q) {
    out << "[" << rows_[q].first.str() << ", " << rows_[q].second.str() << "]";
    if (q + 1 < rows_.size()) out << "\n";
  }
  return out.str();
}

PauliFrame compose(const PauliFrame& f2, const PauliFrame& f1) {
  require_same_width(f2.n_qubits(), f1.n_qubits(), "compose");
  std::vector<std::pair<Pauli, Pauli>> rows;
  rows.reserve(f2.n_qubits());
  for (const auto& [z, x] : f2.rows()) {
    rows.emplace_back(f1.lookup(z), f1.lookup(x));
  }
  return PauliFrame::from_rows(std::move(rows));
}

PauliFrame inverse(const PauliFrame& f) {
  const std::size_t n = f.n_qubits();
  // Expand a target T over the basis {effZ_i, effX_i}: the exponent of
  // effZ_i is lambda(T, effX_i) and of effX_i is lambda(T, effZ_i).
  auto preimage = [&](const Pauli& target) {
    Pauli q(n);
    for (std::size_t i = 0; i < n; ++i) {
      bool a = commutator_lambda(target, f.eff_x(i));
      bool b = commutator_lambda(target, f.eff_z(i));
      if (a && b) {
        q.set_letter(i, Letter::Y);
      } else if (a) {
        q.set_letter(i, Letter::Z);
      } else if (b) {
        q.set_letter(i, Letter::X);
      }
    }
    Pauli image = f.lookup(q);
    if (image != target) q = q.negated();
    return q;
  };
  std::vector<std::pair<Pauli, Pauli>> rows;
  rows.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    rows.emplace_back(preimage(Pauli::single(n, j, Letter::Z)), preimage(Pauli::single(n, j, Letter::X)));
  }
  return PauliFrame::from_rows(std::move(rows));
}

Pauli controlled_pauli_lookup(const Pauli& q, const Pauli& a, const Pauli& b) {
  int la = commutator_lambda(q, a);
  int lb = commutator_lambda(q, b);
  if (!la && !lb) return q;
  if (la && !lb) return mul(q, b);
  if (!la && lb) return mul(q, a);
  return mul(mul(q, a), b).negated();
}

PauliFrame controlled_pauli_frame(const Pauli& a, const Pauli& b) {
  require_same_width(a.n_qubits(), b.n_qubits(), "controlled_pauli_frame");
  if (!a.is_hermitian() || !b.is_hermitian() || commutator_lambda(a, b)) {
    throw std::invalid_argument("controlled_pauli_frame: needs commuting Hermitian operands");
  }
  const std::size_t n = a.n_qubits();
  std::vector<std::pair<Pauli, Pauli>> rows;
  rows.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    rows.emplace_back(controlled_pauli_lookup(Pauli::single(n, j, Letter::Z), a, b),
                      controlled_pauli_lookup(Pauli::single(n, j, Letter::X), a, b));
  }
  return PauliFrame::from_rows(std::move(rows));
}

PauliFrame pauli_gate_frame(const Pauli& p) {
  const std::size_t n = p.n_qubits();
  PauliFrame f = PauliFrame::identity(n);
  std::vector<std::pair<Pauli, Pauli>> rows = f.rows();
  for (auto& [z, x] : rows) {
    if (commutator_lambda(z, p)) z = z.negated();
    if (commutator_lambda(x, p)) x = x.negated();
  }
  return PauliFrame::from_rows(std::move(rows));
}

PauliFrame rotation_frame(const Pauli& p, int quarter_turns) {
  if (!p.is_hermitian()) throw std::invalid_argument("rotation_frame: non-Hermitian axis " + p.str());
  int k = ((quarter_turns % 4) + 4) % 4;
  const std::size_t n = p.n_qubits();
  if (k == 0) return PauliFrame::identity(n);
  if (k == 2) return pauli_gate_frame(p);
  // exp(-i pi/4 P)^dag Q exp(-i pi/4 P) = i P Q for anticommuting Q; -i P Q for the inverse.
  auto act = [&](const Pauli& q) {
    if (!commutator_lambda(p, q)) return q;
    Pauli r = mul(p, q);
    r.set_phase_exp(r.phase_exp() + (k == 1 ? 1 : 3));
    return r;
  };
  std::vector<std::pair<Pauli, Pauli>> rows;
  rows.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    rows.emplace_back(act(Pauli::single(n, j, Letter::Z)), act(Pauli::single(n, j, Letter::X)));
  }
  return PauliFrame::from_rows(std::move(rows));
}

PauliFrame permutation_frame(const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  std::vector<std::pair<Pauli, Pauli>> rows;
  rows.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (perm[j] >= n || seen[perm[j]]) throw std::invalid_argument("permutation_frame: not a permutation");
    seen[perm[j]] = true;
    rows.emplace_back(Pauli::single(n, perm[j], Letter::Z), Pauli::single(n, perm[j], Letter::X));
  }
  return PauliFrame::from_rows(std::move(rows));
}

std::optional<int> clifford_quarter_turns(double theta) {
  if (!std::isfinite(theta)) return std::nullopt;
  double units = theta / (std::numbers::pi / 2);
  double r = std::round(units);
  if (std::abs(units - r) >= 1e-12) return std::nullopt;
  long long k = static_cast<long long>(std::fmod(r, 4.0));
  return static_cast<int>(((k % 4) + 4) % 4);
}

namespace {

void check_qubits(const CliffordGate& g, std::size_t arity, std::size_t n) {
  if (g.qubits.size() != arity) throw std::invalid_argument("from_gate: wrong operand count");
  for (std::size_t q : g.qubits) {
    if (q >= n) throw WidthError("from_gate: qubit " + std::to_string(q) + " out of range");
  }
  if (arity == 2 && g.qubits[0] == g.qubits[1]) throw std::invalid_argument("from_gate: repeated operand");
}

}  // namespace

PauliFrame from_gate(const CliffordGate& g, std::size_t n) {
  auto single = [&](Letter l, std::size_t q) { return Pauli::single(n, q, l); };
  switch (g.kind) {
    case CliffordKind::H: {
      check_qubits(g, 1, n);
      PauliFrame f = PauliFrame::identity(n);
      std::size_t q = g.qubits[0];
      f.set_row(q, single(Letter::X, q), single(Letter::Z, q));
      return f;
    }
    case CliffordKind::S:
      check_qubits(g, 1, n);
      return rotation_frame(single(Letter::Z, g.qubits[0]), 1);
    case CliffordKind::Sdg:
      check_qubits(g, 1, n);
      return rotation_frame(single(Letter::Z, g.qubits[0]), 3);
    case CliffordKind::X:
      check_qubits(g, 1, n);
      return pauli_gate_frame(single(Letter::X, g.qubits[0]));
    case CliffordKind::Y:
      check_qubits(g, 1, n);
      return pauli_gate_frame(single(Letter::Y, g.qubits[0]));
    case CliffordKind::Z:
      check_qubits(g, 1, n);
      return pauli_gate_frame(single(Letter::Z, g.qubits[0]));
    case CliffordKind::CNOT:
      check_qubits(g, 2, n);
      return controlled_pauli_frame(single(Letter::Z, g.qubits[0]), single(Letter::X, g.qubits[1]));
    case CliffordKind::CZ:
      check_qubits(g, 2, n);
      return controlled_pauli_frame(single(Letter::Z, g.qubits[0]), single(Letter::Z, g.qubits[1]));
    case CliffordKind::TQE:
      check_qubits(g, 2, n);
      if (g.sigma1 == Letter::I || g.sigma2 == Letter::I) throw std::invalid_argument("from_gate: TQE basis must be X, Y or Z");
      return controlled_pauli_frame(single(g.sigma1, g.qubits[0]), single(g.sigma2, g.qubits[1]));
    case CliffordKind::SWAP: {
      check_qubits(g, 2, n);
      std::vector<std::size_t> perm(n);
      for (std::size_t j = 0; j < n; ++j) perm[j] = j;
      std::swap(perm[g.qubits[0]], perm[g.qubits[1]]);
      return permutation_frame(perm);
    }
    case CliffordKind::PauliGate:
      require_same_width(g.pauli.n_qubits(), n, "from_gate");
      return pauli_gate_frame(g.pauli);
    case CliffordKind::Rot: {
      require_same_width(g.pauli.n_qubits(), n, "from_gate");
      auto k = clifford_quarter_turns(g.angle);
      if (!k) throw std::invalid_argument("from_gate: rotation angle is not a multiple of pi/2");
      return rotation_frame(g.pauli, *k);
    }
  }
  throw std::invalid_argument("from_gate: unsupported gate");
}

}  // namespace pcoast
