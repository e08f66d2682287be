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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "pcoast/bench.hpp"
#include "pcoast/circuit.hpp"
#include "pcoast/graph.hpp"
#include "pcoast/sim.hpp"

namespace {

using namespace pcoast;
using oracle::cd;
using oracle::Mat;

TEST(Circuit, ParseSmallProgram) {
  Circuit c = parse_circuit("qubits 2\ncbits 2\nprepz q0\nh q0\ncnot q0 q1\nmeasz q0 -> c0");
  EXPECT_EQ(c.n_qubits, 2u);
  EXPECT_EQ(c.n_cvars, 2u);
  ASSERT_EQ(c.gates.size(), 4u);
  EXPECT_EQ(c.gates[2].kind, GateKind::CNOT);
  EXPECT_EQ(c.gates[2].qubits, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(c.gates[3].cvar, 0u);
}

TEST(Circuit, ParseAngles) {
  Circuit c = parse_circuit("qubits 1\nrx(0.5) q0\nRZ(-3*pi/4) q0\nrxy(pi/2, 2*(pi-1)) q0\n");
  EXPECT_DOUBLE_EQ(c.gates[0].angles[0], 0.5);
  EXPECT_EQ(c.gates[1].kind, GateKind::RZ);
  EXPECT_DOUBLE_EQ(c.gates[1].angles[0], -3 * M_PI / 4);
  EXPECT_DOUBLE_EQ(c.gates[2].angles[1], 2 * (M_PI - 1));
  EXPECT_DOUBLE_EQ(parse_angle("pi"), M_PI);
  EXPECT_THROW(parse_angle("pi/"), std::invalid_argument);
}

TEST(Circuit, ParseErrorsCarryPosition) {
  try {
    parse_circuit("qubits 2\ncnot q0 q9\n");
    FAIL() << "expected an operand-range error";
  } catch (const CircuitParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 10u);
  }
  EXPECT_THROW(parse_circuit("h q0\n"), CircuitParseError);
  EXPECT_THROW(parse_circuit("qubits 1\ncbits 1\nmeasz q0 -> c3\n"), CircuitParseError);
  EXPECT_THROW(parse_circuit("qubits 1\nfoo q0\n"), CircuitParseError);
  EXPECT_THROW(parse_circuit("qubits 1\nrx q0\n"), CircuitParseError);
  EXPECT_THROW(parse_circuit("qubits 2\ncnot q0 q0\n"), CircuitParseError);
}

TEST(Circuit, EmitParseRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Circuit c = random_circuit(4, 30, seed);
    EXPECT_EQ(parse_circuit(emit_circuit(c)), c) << "seed " << seed;
  }
  Circuit t = parse_circuit("qubits 2\ntqe(y,x) q0 q1\nrxy(0.1,0.2) q1\nprepx q0\n");
  EXPECT_EQ(parse_circuit(emit_circuit(t)), t);
}

TEST(Circuit, MetricsExamples) {
  Circuit d = parse_circuit("qubits 2\ncbits 2\nprepz q0\nprepz q1\nrx(0.8) q0\nry(-pi/2) q1\nmeasz q0 -> c1\nmeasz q1 -> c0\n");
  Metrics m = metrics(d);
  EXPECT_EQ(m.total_gates, 6u);
  EXPECT_EQ(m.two_qubit_gates, 0u);
  EXPECT_EQ(m.depth, 3u);
  EXPECT_EQ(m.measurements, 2u);
  EXPECT_EQ(m.preparations, 2u);
  EXPECT_EQ(metrics(Circuit{}), Metrics{});
  Circuit ladder = parse_circuit("qubits 5\ncnot q0 q1\ncnot q0 q2\ncnot q0 q3\ncnot q0 q4\n");
  EXPECT_EQ(metrics(ladder).depth, 4u);
}

TEST(Circuit, DepthMatchesAsapSchedule) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Circuit c = random_circuit(4, 25, seed);
    std::vector<std::size_t> level(c.n_qubits, 0);
    std::size_t depth = 0;
    for (const Gate& g : c.gates) {
      std::size_t l = 0;
      for (std::size_t q : g.qubits) l = std::max(l, level[q]);
      for (std::size_t q : g.qubits) level[q] = l + 1;
      depth = std::max(depth, l + 1);
    }
    EXPECT_EQ(metrics(c).depth, depth);
  }
}

TEST(Circuit, LoweringExamples) {
  std::vector<Node> m = lower_gate(make_measz(1, 1), 2);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0], Node::measurement(Pauli::parse("Z1", 2), 1));

  std::vector<Node> h = lower_gate(make_gate(GateKind::H, {0}), 2);
  ASSERT_EQ(h.size(), 1u);
  ASSERT_TRUE(h[0].is_frame());
  EXPECT_EQ(h[0].as_frame().frame.lookup(Pauli::parse("Z0", 2)), Pauli::parse("X0", 2));

  // RXY(theta, 0): the two Z conjugations cancel and a single X rotation remains.
  Circuit c;
  c.n_qubits = 1;
  c.gates.push_back(make_gate(GateKind::RXY, {0}, {0.4, 0.0}));
  CompiledProgram p = circuit_to_graph(c);
  ASSERT_EQ(p.graph.size(), 1u);
  EXPECT_EQ(p.graph.node(p.graph.ids()[0]), Node::rotation(Pauli::parse("X0", 1), 0.4));
  EXPECT_TRUE(p.frame.is_identity());
}

Mat one_qubit(std::initializer_list<cd> v) {
  Mat m(2, 2);
  auto it = v.begin();
  m << it[0], it[1], it[2], it[3];
  return m;
}

Mat gate_unitary(const Gate& g, std::size_t n) {
  const double pi = M_PI;
  auto q = [&](std::size_t k) { return g.qubits[k]; };
  auto rot = [&](const char* axis, double th) { return oracle::expm_rotation(Pauli::parse(axis + std::to_string(q(0)), n), th); };
  cd i(0, 1);
  switch (g.kind) {
    case GateKind::H: return oracle::h(n, q(0));
    case GateKind::S: return oracle::s(n, q(0));
    case GateKind::Sdg: return oracle::s(n, q(0)).adjoint();
    case GateKind::X: return oracle::single(n, q(0), one_qubit({0, 1, 1, 0}));
    case GateKind::Y: return oracle::single(n, q(0), one_qubit({0, -i, i, 0}));
    case GateKind::Z: return oracle::single(n, q(0), one_qubit({1, 0, 0, -1}));
    case GateKind::T: return oracle::single(n, q(0), one_qubit({1, 0, 0, std::exp(i * pi / 4.0)}));
    case GateKind::Tdg: return oracle::single(n, q(0), one_qubit({1, 0, 0, std::exp(-i * pi / 4.0)}));
    case GateKind::RX: return rot("X", g.angles[0]);
    case GateKind::RY: return rot("Y", g.angles[0]);
    case GateKind::RZ: return rot("Z", g.angles[0]);
    case GateKind::RXY: {
      double th = g.angles[0], ph = g.angles[1];
      Mat axis = std::cos(ph) * oracle::single(n, q(0), one_qubit({0, 1, 1, 0})) +
                 std::sin(ph) * oracle::single(n, q(0), one_qubit({0, -i, i, 0}));
      return Mat(cd(0, -th / 2) * axis).exp();
    }
    case GateKind::CNOT: return oracle::cnot(n, q(0), q(1));
    case GateKind::CZ: return oracle::cz(n, q(0), q(1));
    case GateKind::SWAP: return oracle::swap(n, q(0), q(1));
    case GateKind::TQE: {
      Mat a = oracle::dense(Pauli::single(n, q(0), g.sigma1));
      Mat b = oracle::dense(Pauli::single(n, q(1), g.sigma2));
      Mat I = Mat::Identity(a.rows(), a.cols());
      return 0.5 * (I + a + b - a * b);
    }
    default: break;
  }
  ADD_FAILURE() << "no unitary for " << gate_name(g.kind);
  return Mat();
}

TEST(Circuit, LoweredUnitaryGatesMatchMatrices) {
  const std::size_t n = 2;
  std::vector<Gate> gates;
  for (GateKind k : {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::X, GateKind::Y, GateKind::Z, GateKind::T,
                     GateKind::Tdg})
    gates.push_back(make_gate(k, {1}));
  for (GateKind k : {GateKind::RX, GateKind::RY, GateKind::RZ}) gates.push_back(make_gate(k, {0}, {0.37}));
  gates.push_back(make_gate(GateKind::RXY, {1}, {0.9, -0.6}));
  gates.push_back(make_gate(GateKind::RXY, {0}, {M_PI / 2, M_PI / 2}));
  for (GateKind k : {GateKind::CNOT, GateKind::CZ, GateKind::SWAP}) gates.push_back(make_gate(k, {1, 0}));
  for (Letter a : {Letter::X, Letter::Y, Letter::Z})
    for (Letter b : {Letter::X, Letter::Y, Letter::Z}) gates.push_back(make_tqe(a, b, 0, 1));
  std::mt19937_64 rng(51);
  for (const Gate& g : gates) {
    Mat rho = random_density(n, rng);
    CqState s = run_nodes(state_from_density(n, rho), lower_gate(g, n));
    Mat u = gate_unitary(g, n);
    ASSERT_EQ(s.branches.size(), 1u);
    EXPECT_TRUE(oracle::close(s.branches.begin()->second, u * rho * u.adjoint())) << gate_name(g.kind);
  }
}

TEST(Circuit, LoweredPreparationsAndMeasurement) {
  const std::size_t n = 2;
  std::mt19937_64 rng(52);
  Mat rho = random_density(n, rng);
  const double r = 1 / std::sqrt(2.0);
  // Reset of qubit 1 to |0> or |+>: Kraus operators |v><0| and |v><1|.
  for (auto [kind, v0, v1] : {std::tuple{GateKind::PrepZ, 1.0, 0.0}, std::tuple{GateKind::PrepX, r, r}}) {
    Mat k0 = oracle::single(n, 1, one_qubit({v0, 0, v1, 0}));
    Mat k1 = oracle::single(n, 1, one_qubit({0, v0, 0, v1}));
    CqState s = run_nodes(state_from_density(n, rho), lower_gate(make_gate(kind, {1}), n));
    ASSERT_EQ(s.branches.size(), 1u);
    EXPECT_TRUE(oracle::close(s.branches.begin()->second, k0 * rho * k0.adjoint() + k1 * rho * k1.adjoint()));
  }
  CqState s = run_nodes(state_from_density(n, rho), lower_gate(make_measz(0, 0), n));
  Mat p0 = oracle::single(n, 0, one_qubit({1, 0, 0, 0}));
  Mat p1 = oracle::single(n, 0, one_qubit({0, 0, 0, 1}));
  EXPECT_TRUE(oracle::close(s.branches.at({{0, false}}), p0 * rho * p0));
  EXPECT_TRUE(oracle::close(s.branches.at({{0, true}}), p1 * rho * p1));
}

TEST(Circuit, GateFrameOnlyForCliffords) {
  EXPECT_TRUE(gate_frame(make_gate(GateKind::CZ, {0, 1}), 2).has_value());
  EXPECT_FALSE(gate_frame(make_gate(GateKind::T, {0}), 2).has_value());
  EXPECT_FALSE(gate_frame(make_gate(GateKind::RXY, {0}, {M_PI, M_PI / 2}), 2).has_value());  // kind, not angle
  EXPECT_FALSE(gate_frame(make_gate(GateKind::RX, {0}, {0.3}), 2).has_value());
}

}  // namespace
