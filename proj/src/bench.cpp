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

#include "pcoast/bench.hpp"

#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

namespace pcoast {

namespace {

using std::numbers::pi;

void add(Circuit& c, GateKind k, std::vector<std::size_t> q, std::vector<double> a = {}) {
  c.gates.push_back(make_gate(k, std::move(q), std::move(a)));
}

// exp(-i theta/2 Z_a Z_b) on a and b.
void zz(Circuit& c, std::size_t a, std::size_t b, double theta) {
  add(c, GateKind::CNOT, {a, b});
  add(c, GateKind::RZ, {b}, {theta});
  add(c, GateKind::CNOT, {a, b});
}

double uniform_angle(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(-pi, pi)(rng);
}

}  // namespace

Circuit bench_qft(std::size_t n) {
  Circuit c;
  c.n_qubits = n;
  for (std::size_t j = 0; j < n; ++j) {
    add(c, GateKind::H, {j});
    for (std::size_t k = j + 1; k < n; ++k) {
      double phi = pi / static_cast<double>(std::size_t{1} << std::min<std::size_t>(k - j, 62));
      // controlled phase: RZ(phi/2) on both, then a ZZ(-phi/2) parity rotation
      add(c, GateKind::RZ, {j}, {phi / 2});
      add(c, GateKind::RZ, {k}, {phi / 2});
      zz(c, j, k, -phi / 2);
    }
  }
  for (std::size_t j = 0; j < n / 2; ++j) add(c, GateKind::SWAP, {j, n - 1 - j});
  return c;
}

Circuit bench_grover(std::size_t n) {
  if (n == 0 || n > 12) throw std::invalid_argument("grover benchmark supports 1..12 qubits");
  Circuit c;
  c.n_qubits = n;
  for (std::size_t q = 0; q < n; ++q) add(c, GateKind::H, {q});
  for (std::size_t q = 0; q < n; ++q) add(c, GateKind::X, {q});
  // |1..1><1..1| = 2^-n sum_S (-1)^|S| Z_S, so exp(i pi P) is a product of parity rotations.
  const double scale = 2 * pi / static_cast<double>(std::size_t{1} << n);
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t q = 0; q < n; ++q) {
      if ((mask >> q) & 1u) s.push_back(q);
    }
    double theta = (s.size() % 2 == 0) ? -scale : scale;
    for (std::size_t k = 0; k + 1 < s.size(); ++k) add(c, GateKind::CNOT, {s[k], s[k + 1]});
    add(c, GateKind::RZ, {s.back()}, {theta});
    for (std::size_t k = s.size() - 1; k > 0; --k) add(c, GateKind::CNOT, {s[k - 1], s[k]});
  }
  for (std::size_t q = 0; q < n; ++q) add(c, GateKind::X, {q});
  for (std::size_t q = 0; q < n; ++q) add(c, GateKind::H, {q});
  return c;
}

Circuit bench_hea(std::size_t n, std::size_t layers, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Circuit c;
  c.n_qubits = n;
  c.n_cvars = n;
  for (std::size_t q = 0; q < n; ++q) add(c, GateKind::PrepZ, {q});
  for (std::size_t l = 0; l <= layers; ++l) {
    for (std::size_t q = 0; q < n; ++q) {
      add(c, GateKind::RY, {q}, {uniform_angle(rng)});
      add(c, GateKind::RZ, {q}, {uniform_angle(rng)});
    }
    if (l == layers) break;
    for (std::size_t q = 0; q + 1 < n; ++q) add(c, GateKind::CNOT, {q, q + 1});
  }
  for (std::size_t q = 0; q < n; ++q) c.gates.push_back(make_measz(q, static_cast<Cvar>(q)));
  return c;
}

Circuit bench_qaoa(std::size_t n, std::size_t rounds, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Circuit c;
  c.n_qubits = n;
  c.n_cvars = n;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t q = 0; q + 1 < n; ++q) edges.emplace_back(q, q + 1);
  if (n > 2) edges.emplace_back(0, n - 1);
  for (std::size_t k = 0; k < n / 2 && n > 3; ++k) {
    std::size_t a = rng() % n, b = rng() % n;
    if (a == b) continue;
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  for (std::size_t q = 0; q < n; ++q) add(c, GateKind::PrepZ, {q});
  for (std::size_t q = 0; q < n; ++q) add(c, GateKind::H, {q});
  for (std::size_t r = 0; r < rounds; ++r) {
    double gamma = uniform_angle(rng), beta = uniform_angle(rng);
    for (auto [a, b] : edges) zz(c, a, b, gamma);
    for (std::size_t q = 0; q < n; ++q) add(c, GateKind::RX, {q}, {2 * beta});
  }
  for (std::size_t q = 0; q < n; ++q) c.gates.push_back(make_measz(q, static_cast<Cvar>(q)));
  return c;
}

Circuit random_circuit(std::size_t n, std::size_t gates, std::uint64_t seed, const RandomCircuitOptions& opt) {
  if (n == 0) throw std::invalid_argument("random circuit needs at least one qubit");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Circuit c;
  c.n_qubits = n;
  c.n_cvars = n;
  static const GateKind one[] = {GateKind::H,  GateKind::S, GateKind::Sdg, GateKind::X,   GateKind::Y,  GateKind::Z,
                                 GateKind::T,  GateKind::Tdg, GateKind::RX, GateKind::RY, GateKind::RZ};
  static const GateKind two[] = {GateKind::CNOT, GateKind::CZ, GateKind::SWAP};
  for (std::size_t k = 0; k < gates; ++k) {
    double u = unit(rng);
    std::size_t q = rng() % n;
    if (u < opt.measure_probability) {
      c.gates.push_back(make_measz(q, static_cast<Cvar>(rng() % n)));
    } else if (u < opt.measure_probability + opt.prepare_probability) {
      add(c, GateKind::PrepZ, {q});
    } else if (n > 1 && u < opt.measure_probability + opt.prepare_probability + opt.two_qubit_probability) {
      std::size_t r = (q + 1 + rng() % (n - 1)) % n;
      add(c, two[rng() % 3], {q, r});
    } else {
      GateKind kind = one[rng() % 11];
      if (gate_angle_count(kind) == 1) {
        add(c, kind, {q}, {uniform_angle(rng)});
      } else {
        add(c, kind, {q});
      }
    }
  }
  return c;
}

const std::vector<std::string>& bench_families() {
  static const std::vector<std::string> names{"qft", "grover", "hea", "qaoa", "random"};
  return names;
}

Circuit bench_family(const std::string& family, std::size_t n, std::size_t layers, std::size_t gates,
                     std::uint64_t seed) {
  if (family == "qft") return bench_qft(n);
  if (family == "grover") return bench_grover(n);
  if (family == "hea") return bench_hea(n, layers, seed);
  if (family == "qaoa") return bench_qaoa(n, layers, seed);
  if (family == "random") return random_circuit(n, gates, seed);
  throw std::invalid_argument("unknown benchmark family '" + family + "'");
}

}  // namespace pcoast
