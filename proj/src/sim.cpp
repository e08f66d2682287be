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

#include "pcoast/sim.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <sstream>

namespace pcoast {

namespace {

using cd = std::complex<double>;

constexpr cd kIPow[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};

void check_width(std::size_t n) {
  if (n > kSimMaxQubits) {
    throw SimCapError("simulator is capped at " + std::to_string(kSimMaxQubits) + " qubits, got " + std::to_string(n));
  }
}

// P|b> = w(b) |b ^ x>.
struct PauliAction {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  int base = 0;  // power of i

  explicit PauliAction(const Pauli& p) {
    x = p.x_words().empty() ? 0 : p.x_words()[0];
    z = p.z_words().empty() ? 0 : p.z_words()[0];
    base = p.phase_exp() + std::popcount(x & z);
  }
  cd weight(std::uint64_t b) const { return kIPow[(base + 2 * (std::popcount(z & b) & 1)) & 3]; }
};

Matrix left_mul(const PauliAction& p, const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (Eigen::Index b = 0; b < m.rows(); ++b) {
    auto target = static_cast<Eigen::Index>(static_cast<std::uint64_t>(b) ^ p.x);
    out.row(target) = p.weight(static_cast<std::uint64_t>(b)) * m.row(b);
  }
  return out;
}

Matrix right_mul(const Matrix& m, const PauliAction& p) {
  Matrix out(m.rows(), m.cols());
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    auto src = static_cast<Eigen::Index>(static_cast<std::uint64_t>(c) ^ p.x);
    out.col(c) = p.weight(static_cast<std::uint64_t>(c)) * m.col(src);
  }
  return out;
}

Matrix conj_by(const PauliAction& p, const Matrix& m) { return right_mul(left_mul(p, m), p); }

void add_branch(std::map<Assignment, Matrix>& out, const Assignment& key, const Matrix& m) {
  auto it = out.find(key);
  if (it == out.end()) {
    out.emplace(key, m);
  } else {
    it->second += m;
  }
}

void prune(CqState& s) {
  for (auto it = s.branches.begin(); it != s.branches.end();) {
    if (std::abs(it->second.trace()) < kSimPruneTrace && it->second.cwiseAbs().maxCoeff() < kSimPruneTrace) {
      it = s.branches.erase(it);
    } else {
      ++it;
    }
  }
  if (s.branches.size() > kSimMaxBranches) {
    throw SimCapError("simulator exceeded " + std::to_string(kSimMaxBranches) + " live branches");
  }
}

}  // namespace

double CqState::trace() const {
  double t = 0;
  for (const auto& [_, m] : branches) t += m.trace().real();
  return t;
}

std::string CqState::str() const {
  std::ostringstream out;
  for (const auto& [m, rho] : branches) {
    out << "{";
    bool first = true;
    for (const auto& [c, b] : m) {
      if (!first) out << ", ";
      first = false;
      out << default_cvar_name(c) << "=" << b;
    }
    out << "} trace " << rho.trace().real() << "\n";
  }
  return out.str();
}

CqState initial_state(std::size_t n, InitialState kind) {
  check_width(n);
  const Eigen::Index d = Eigen::Index{1} << n;
  Matrix rho = Matrix::Zero(d, d);
  if (kind == InitialState::Zero) {
    rho(0, 0) = 1.0;
  } else {
    rho = Matrix::Identity(d, d) / static_cast<double>(d);
  }
  return state_from_density(n, rho);
}

CqState state_from_density(std::size_t n, const Matrix& rho) {
  check_width(n);
  CqState s;
  s.n_qubits = n;
  s.branches.emplace(Assignment{}, rho);
  return s;
}

Matrix random_density(std::size_t n, std::mt19937_64& rng) {
  check_width(n);
  const Eigen::Index d = Eigen::Index{1} << n;
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix a(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) a(r, c) = cd(gauss(rng), gauss(rng));
  }
  Matrix rho = a * a.adjoint();
  return rho / rho.trace().real();
}

Matrix pauli_matrix(const Pauli& p) {
  check_width(p.n_qubits());
  const Eigen::Index d = Eigen::Index{1} << p.n_qubits();
  return left_mul(PauliAction(p), Matrix::Identity(d, d));
}

Matrix rotation_matrix(const Pauli& p, double theta) {
  const Eigen::Index d = Eigen::Index{1} << p.n_qubits();
  return std::cos(theta / 2) * Matrix::Identity(d, d) - cd(0, std::sin(theta / 2)) * pauli_matrix(p);
}

Matrix frame_unitary(const PauliFrame& f) {
  const std::size_t n = f.n_qubits();
  check_width(n);
  const Eigen::Index d = Eigen::Index{1} << n;
  PauliFrame inv = inverse(f);
  // U|0> is the joint +1 eigenvector of U Z_j U^dag = inv(Z_j).
  Matrix proj = Matrix::Identity(d, d);
  for (std::size_t j = 0; j < n; ++j) {
    proj = 0.5 * (proj + left_mul(PauliAction(inv.eff_z(j)), proj));
  }
  // Rank one, so the largest column has norm at least 1/sqrt(d).
  Eigen::Index best = 0;
  proj.colwise().norm().maxCoeff(&best);
  Eigen::VectorXcd psi0 = proj.col(best).normalized();
  Matrix u(d, d);
  for (Eigen::Index b = 0; b < d; ++b) {
    Matrix v = psi0;
    for (std::size_t j = 0; j < n; ++j) {
      if ((static_cast<std::uint64_t>(b) >> j) & 1u) v = left_mul(PauliAction(inv.eff_x(j)), v);
    }
    u.col(b) = v;
  }
  return u;
}

void apply_node(CqState& s, const Node& n) {
  if (n.is_msf()) {
    std::map<Assignment, Matrix> out;
    for (const auto& [m, rho] : s.branches) add_branch(out, n.as_msf().mu.apply(m), rho);
    s.branches = std::move(out);
    return;
  }
  require_same_width(n.n_qubits(), s.n_qubits, "apply_node");
  if (n.is_rotation()) {
    PauliAction p(n.as_rotation().axis);
    double c = std::cos(n.as_rotation().theta / 2), sn = std::sin(n.as_rotation().theta / 2);
    for (auto& [_, rho] : s.branches) {
      Matrix pr = left_mul(p, rho);
      Matrix rp = right_mul(rho, p);
      Matrix prp = right_mul(pr, p);
      rho = (c * c) * rho + (sn * sn) * prp - cd(0, c * sn) * (pr - rp);
    }
  } else if (n.is_preparation()) {
    PauliAction pz(n.as_preparation().pz), px(n.as_preparation().px);
    for (auto& [_, rho] : s.branches) {
      Matrix zr = left_mul(pz, rho);
      Matrix rz = right_mul(rho, pz);
      Matrix zrz = right_mul(zr, pz);
      Matrix keep = rho + zr + rz + zrz;
      Matrix flip = rho - zr - rz + zrz;
      rho = 0.25 * (keep + conj_by(px, flip));
    }
  } else if (n.is_measurement()) {
    PauliAction p(n.as_measurement().axis);
    Cvar c = n.as_measurement().cvar;
    std::map<Assignment, Matrix> out;
    for (const auto& [m, rho] : s.branches) {
      Matrix pr = left_mul(p, rho);
      Matrix rp = right_mul(rho, p);
      Matrix prp = right_mul(pr, p);
      Assignment m0 = m, m1 = m;
      m0[c] = false;
      m1[c] = true;
      add_branch(out, m0, 0.25 * (rho + pr + rp + prp));
      add_branch(out, m1, 0.25 * (rho - pr - rp + prp));
    }
    s.branches = std::move(out);
  } else {
    Matrix u = frame_unitary(n.as_frame().frame);
    for (auto& [_, rho] : s.branches) rho = u * rho * u.adjoint();
  }
  prune(s);
}

CqState run_nodes(CqState s, const std::vector<Node>& nodes) {
  for (const Node& n : nodes) apply_node(s, n);
  return s;
}

CqState run_circuit(const Circuit& c, CqState s) {
  require_same_width(c.n_qubits, s.n_qubits, "run_circuit");
  for (const Gate& g : c.gates) {
    for (const Node& n : lower_gate(g, c.n_qubits)) apply_node(s, n);
  }
  return s;
}

CqState run_circuit(const Circuit& c, InitialState kind) { return run_circuit(c, initial_state(c.n_qubits, kind)); }

CqState run_program(const CompiledProgram& prog, CqState s) {
  require_same_width(prog.n_qubits, s.n_qubits, "run_program");
  for (NodeId id : prog.graph.topological_order()) apply_node(s, prog.graph.node(id));
  apply_node(s, Node::frame(prog.frame));
  apply_node(s, Node::msf(prog.mu));
  return s;
}

CqState run_program(const CompiledProgram& prog, InitialState kind) {
  return run_program(prog, initial_state(prog.n_qubits, kind));
}

CqState marginalize(const CqState& s, const std::function<bool(Cvar)>& keep) {
  CqState out;
  out.n_qubits = s.n_qubits;
  for (const auto& [m, rho] : s.branches) {
    Assignment k;
    for (const auto& [c, b] : m) {
      if (keep(c)) k[c] = b;
    }
    add_branch(out.branches, k, rho);
  }
  return out;
}

double hold_deviation(const CqState& a, const CqState& b) {
  if (a.n_qubits != b.n_qubits) return INFINITY;
  double worst = 0;
  for (const auto& [m, rho] : a.branches) {
    auto it = b.branches.find(m);
    double dev = it == b.branches.end() ? rho.cwiseAbs().maxCoeff() : (rho - it->second).cwiseAbs().maxCoeff();
    worst = std::max(worst, dev);
  }
  for (const auto& [m, rho] : b.branches) {
    if (!a.branches.count(m)) worst = std::max(worst, rho.cwiseAbs().maxCoeff());
  }
  return worst;
}

double release_deviation(const CqState& a, const CqState& b) {
  if (a.n_qubits != b.n_qubits) return INFINITY;
  double worst = 0;
  for (const auto& [m, rho] : a.branches) {
    auto it = b.branches.find(m);
    double tb = it == b.branches.end() ? 0.0 : it->second.trace().real();
    worst = std::max(worst, std::abs(rho.trace().real() - tb));
  }
  for (const auto& [m, rho] : b.branches) {
    if (!a.branches.count(m)) worst = std::max(worst, std::abs(rho.trace().real()));
  }
  return worst;
}

bool equiv_hold(const CqState& a, const CqState& b, double tol) { return hold_deviation(a, b) <= tol; }
bool equiv_release(const CqState& a, const CqState& b, double tol) { return release_deviation(a, b) <= tol; }

EquivalenceReport check_equivalent(std::size_t n, Cvar n_user_cvars, const Channel& a, const Channel& b,
                                   Outcome outcome, std::uint64_t seed, std::size_t random_states, double tol) {
  std::vector<CqState> inits{initial_state(n, InitialState::Zero), initial_state(n, InitialState::MaximallyMixed)};
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < random_states; ++k) inits.push_back(state_from_density(n, random_density(n, rng)));
  auto keep = [n_user_cvars](Cvar c) { return c < n_user_cvars; };
  EquivalenceReport rep;
  for (const CqState& init : inits) {
    CqState ra = marginalize(a(init), keep);
    CqState rb = marginalize(b(init), keep);
    double dev = outcome == Outcome::Hold ? hold_deviation(ra, rb) : release_deviation(ra, rb);
    rep.max_deviation = std::max(rep.max_deviation, dev);
    ++rep.states_checked;
  }
  rep.equivalent = rep.max_deviation <= tol;
  return rep;
}

}  // namespace pcoast
