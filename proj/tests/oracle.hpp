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

// Independent dense-matrix helpers shared by the unit tests. Nothing here
// calls into the library's simulator; gate matrices are built by hand.

#ifndef PCOAST_TESTS_ORACLE_HPP
#define PCOAST_TESTS_ORACLE_HPP

#include <cmath>
#include <complex>
#include <ostream>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "pcoast/frame.hpp"
#include "pcoast/pauli.hpp"
#include "pcoast/synth.hpp"

namespace pcoast {
inline void PrintTo(const Pauli& p, std::ostream* os) { *os << p.str(); }
inline void PrintTo(const TqeGate& g, std::ostream* os) { *os << g.str(); }
inline void PrintTo(Outcome o, std::ostream* os) { *os << (o == Outcome::Hold ? "hold" : "release"); }
inline void PrintTo(GateSet s, std::ostream* os) { *os << (s == GateSet::Generic ? "generic" : "native"); }
}  // namespace pcoast

namespace oracle {

using Mat = Eigen::MatrixXcd;
using cd = std::complex<double>;

inline Mat letter_matrix(pcoast::Letter l) {
  Mat m(2, 2);
  switch (l) {
    case pcoast::Letter::I: m << 1, 0, 0, 1; break;
    case pcoast::Letter::X: m << 0, 1, 1, 0; break;
    case pcoast::Letter::Y: m << 0, cd(0, -1), cd(0, 1), 0; break;
    case pcoast::Letter::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

// Kronecker product with qubit j on bit j of the basis index.
inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Mat dense(const pcoast::Pauli& p) {
  Mat m = Mat::Identity(1, 1);
  for (std::size_t q = 0; q < p.n_qubits(); ++q) m = kron(letter_matrix(p.letter(q)), m);
  static const cd kI[4] = {1, cd(0, 1), -1, cd(0, -1)};
  return kI[p.phase_exp()] * m;
}

// Operator that maps basis state b to f(b) with amplitude phase(b).
template <class Fn, class Ph>
Mat basis_map(std::size_t n, Fn f, Ph phase) {
  const std::size_t d = std::size_t{1} << n;
  Mat u = Mat::Zero(d, d);
  for (std::size_t b = 0; b < d; ++b) u(f(b), b) = phase(b);
  return u;
}

inline Mat single(std::size_t n, std::size_t q, const Mat& g) {
  Mat m = Mat::Identity(1, 1);
  for (std::size_t k = 0; k < n; ++k) m = kron(k == q ? g : Mat(Mat::Identity(2, 2)), m);
  return m;
}

inline Mat h(std::size_t n, std::size_t q) {
  Mat g(2, 2);
  g << 1, 1, 1, -1;
  return single(n, q, g / std::sqrt(2.0));
}

inline Mat s(std::size_t n, std::size_t q) {
  Mat g(2, 2);
  g << 1, 0, 0, cd(0, 1);
  return single(n, q, g);
}

inline Mat cnot(std::size_t n, std::size_t c, std::size_t t) {
  return basis_map(n, [=](std::size_t b) { return ((b >> c) & 1) ? b ^ (std::size_t{1} << t) : b; },
                   [](std::size_t) { return cd(1); });
}

inline Mat cz(std::size_t n, std::size_t a, std::size_t b) {
  return basis_map(n, [](std::size_t x) { return x; },
                   [=](std::size_t x) { return ((x >> a) & (x >> b) & 1) ? cd(-1) : cd(1); });
}

inline Mat swap(std::size_t n, std::size_t a, std::size_t b) {
  return basis_map(
      n,
      [=](std::size_t x) {
        std::size_t ba = (x >> a) & 1, bb = (x >> b) & 1;
        x &= ~((std::size_t{1} << a) | (std::size_t{1} << b));
        return x | (ba << b) | (bb << a);
      },
      [](std::size_t) { return cd(1); });
}

// exp(-i theta/2 P) via the matrix exponential.
inline Mat expm_rotation(const pcoast::Pauli& p, double theta) {
  Mat a = cd(0, -theta / 2) * dense(p);
  return a.exp();
}

inline bool close(const Mat& a, const Mat& b, double tol = 1e-9) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).cwiseAbs().maxCoeff() <= tol;
}

// Equal up to a global phase.
inline bool close_up_to_phase(const Mat& a, const Mat& b, double tol = 1e-9) {
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) < tol) return close(a, b, tol);
  cd ph = a(r, c) / b(r, c);
  if (std::abs(std::abs(ph) - 1) > tol) return false;
  return close(a, ph * b, tol);
}

inline pcoast::Pauli random_pauli(std::size_t n, std::mt19937_64& rng, bool allow_identity = true) {
  std::uniform_int_distribution<int> letter(0, 3), sign(0, 1);
  for (;;) {
    pcoast::Pauli p(n);
    for (std::size_t q = 0; q < n; ++q) p.set_letter(q, static_cast<pcoast::Letter>(letter(rng)));
    p.set_phase_exp(2 * sign(rng));
    if (allow_identity || !p.is_identity()) return p;
  }
}

inline std::pair<pcoast::Pauli, pcoast::Pauli> random_anticommuting(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    pcoast::Pauli p = random_pauli(n, rng), q = random_pauli(n, rng);
    if (!pcoast::commute(p, q)) return {p, q};
  }
}

// A random Clifford frame together with its independently built unitary.
struct RandomClifford {
  pcoast::PauliFrame frame;
  Mat unitary;
};

inline RandomClifford random_clifford(std::size_t n, std::size_t gates, std::mt19937_64& rng) {
  using pcoast::CliffordGate;
  using pcoast::CliffordKind;
  RandomClifford out{pcoast::PauliFrame::identity(n), Mat::Identity(std::size_t{1} << n, std::size_t{1} << n)};
  std::uniform_int_distribution<int> kind(0, n > 1 ? 3 : 1);
  std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
  for (std::size_t k = 0; k < gates; ++k) {
    std::size_t a = qubit(rng), b = qubit(rng);
    while (n > 1 && b == a) b = qubit(rng);
    CliffordGate g;
    Mat u;
    switch (kind(rng)) {
      case 0: g = {CliffordKind::H, {a}}; u = h(n, a); break;
      case 1: g = {CliffordKind::S, {a}}; u = s(n, a); break;
      case 2: g = {CliffordKind::CNOT, {a, b}}; u = cnot(n, a, b); break;
      default: g = {CliffordKind::CZ, {a, b}}; u = cz(n, a, b); break;
    }
    out.frame = pcoast::compose(pcoast::from_gate(g, n), out.frame);
    out.unitary = u * out.unitary;
  }
  return out;
}

}  // namespace oracle

#endif  // PCOAST_TESTS_ORACLE_HPP
