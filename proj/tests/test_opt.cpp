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

#include "oracle.hpp"
#include "pcoast/bench.hpp"
#include "pcoast/circuit.hpp"
#include "pcoast/cost.hpp"
#include "pcoast/opt.hpp"
#include "pcoast/sim.hpp"

namespace {

using namespace pcoast;

Pauli P(const char* text, std::size_t n = 2) { return Pauli::parse(text, n); }

const char* kDemo =
    "qubits 2\ncbits 2\nprepz q0\nprepz q1\nrx(0.3) q0\nh q1\ncnot q1 q0\nrx(0.5) q0\ncnot q0 q1\n"
    "rx(0.7) q0\nmeasz q0 -> c0\nmeasz q1 -> c1\n";

std::vector<Node> nodes_of(const CompiledProgram& p) {
  std::vector<Node> out;
  for (NodeId id : p.graph.ids()) out.push_back(p.graph.node(id));
  return out;
}

bool equivalent(const CompiledProgram& a, const CompiledProgram& b, Outcome o, std::uint64_t seed = 1) {
  auto ra = [&](const CqState& s) { return run_program(a, s); };
  auto rb = [&](const CqState& s) { return run_program(b, s); };
  return check_equivalent(a.n_qubits, a.n_user_cvars, ra, rb, o, seed).equivalent;
}

std::string fingerprint(const CompiledProgram& p) { return p.graph.dump() + p.frame.str() + p.mu.str(); }

TEST(Opt, RemovesControlLine) {
  CompiledProgram p = compile_nodes(2, 0, {Node::preparation(P("Z0"), P("X0")), Node::rotation(P("Z0Z1"), 0.4),
                                           Node::rotation(P("Z1"), 0.4)});
  CompiledProgram q = optimize(p, Outcome::Hold);
  std::vector<Node> expect{Node::preparation(P("Z0"), P("X0")), Node::rotation(P("Z1"), 0.8)};
  EXPECT_EQ(nodes_of(q), expect);
  EXPECT_TRUE(equivalent(p, q, Outcome::Hold));
}

TEST(Opt, SupportUnchangedWithoutStabilizer) {
  CompiledProgram p = compile_nodes(2, 0, {Node::rotation(P("Z0Z1"), 0.4), Node::rotation(P("X0"), 0.2)});
  CompiledProgram q = p;
  EXPECT_FALSE(reduce_node_support(q));
  EXPECT_EQ(fingerprint(p), fingerprint(q));
}

TEST(Opt, AnticommutingNodeBlocksStabilizer) {
  CompiledProgram p =
      compile_nodes(3, 1, {Node::preparation(P("X0", 3), P("Y0", 3)), Node::measurement(P("Y0X1Z2", 3), 0)});
  CompiledProgram q = p;
  EXPECT_FALSE(reduce_node_support(q));
  EXPECT_EQ(fingerprint(p), fingerprint(q));
}

TEST(Opt, RemovesTrailingCz) {
  std::vector<Node> ns{Node::preparation(P("Z0"), P("X0")),
                       Node::frame(from_gate(CliffordGate{CliffordKind::CZ, {0, 1}}, 2))};
  CompiledProgram p = compile_nodes(2, 0, ns);
  EXPECT_EQ(p.frame.eff_x(0), P("X0Z1"));
  EXPECT_EQ(p.frame.eff_x(1), P("Z0X1"));
  CompiledProgram q = p;
  EXPECT_TRUE(reduce_terminal_frame(q));
  EXPECT_TRUE(q.frame.is_identity());
  EXPECT_TRUE(equivalent(p, q, Outcome::Hold));
  EXPECT_FALSE(reduce_terminal_frame(q));
}

TEST(Opt, TerminalFrameCostNeverIncreases) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    CompiledProgram p = circuit_to_graph(random_circuit(3, 20, seed));
    std::size_t before = frame_cost(p.frame);
    reduce_terminal_frame(p);
    EXPECT_LE(frame_cost(p.frame), before);
  }
}

TEST(Opt, PruneDropsTrailingRotationsAndFrame) {
  CompiledProgram p = compile_nodes(2, 1, {Node::measurement(P("Z0"), 0), Node::rotation(P("X0"), 0.3),
                                           Node::frame(from_gate(CliffordGate{CliffordKind::H, {1}}, 2))});
  EXPECT_TRUE(release_prune(p));
  EXPECT_EQ(nodes_of(p), std::vector<Node>{Node::measurement(P("Z0"), 1)});
  EXPECT_TRUE(p.frame.is_identity());

  CompiledProgram m = compile_nodes(2, 2, {Node::measurement(P("Z0"), 0), Node::measurement(P("X1"), 1)});
  EXPECT_FALSE(release_prune(m));
}

TEST(Opt, PreparedMeasurementBecomesConstant) {
  CompiledProgram p;
  p.n_qubits = 1;
  p.n_user_cvars = 1;
  p.next_cvar = 1;
  p.graph = PcoastGraph(1);
  p.frame = PauliFrame::identity(1);
  p.graph.insert(Node::preparation(P("Z0", 1), P("X0", 1)));
  p.graph.insert(Node::measurement(P("Z0", 1), 0));
  CompiledProgram q = p;
  EXPECT_TRUE(release_measurement_reduction(q));
  EXPECT_EQ(q.graph.size(), 1u);
  EXPECT_EQ(q.mu, Msf::single(0, {}, false));
  EXPECT_TRUE(equivalent(p, q, Outcome::Release));
}

// Demo: Z0X1 is rewritten to X1; one target reads g(Z0), the other g(Z0) + g(X1).
TEST(Opt, DemoReleaseReducesMeasurements) {
  CompiledProgram p = circuit_to_graph(parse_circuit(kDemo));
  CompiledProgram q = optimize(p, Outcome::Release);
  EXPECT_TRUE(q.frame.is_identity());
  Cvar gz = 0, gx = 0;
  int found = 0;
  for (const Node& n : nodes_of(q)) {
    if (!n.is_measurement()) continue;
    if (n.as_measurement().axis == P("Z0")) gz = n.as_measurement().cvar, ++found;
    if (n.as_measurement().axis == P("X1")) gx = n.as_measurement().cvar, ++found;
  }
  ASSERT_EQ(found, 2) << q.graph.dump();
  EXPECT_EQ(measurement_load(q.graph).count, 2u);
  ASSERT_NE(q.mu.find(1), nullptr);
  ASSERT_NE(q.mu.find(0), nullptr);
  EXPECT_EQ(q.mu.find(1)->sources, std::vector<Cvar>{gz});
  std::vector<Cvar> both{gz, gx};
  std::sort(both.begin(), both.end());
  EXPECT_EQ(q.mu.find(0)->sources, both);
  EXPECT_FALSE(q.mu.find(0)->constant);
  EXPECT_TRUE(equivalent(p, q, Outcome::Release));
}

TEST(Opt, DemoHoldKeepsMergedGraph) {
  CompiledProgram p = circuit_to_graph(parse_circuit(kDemo));
  CompiledProgram q = optimize(p, Outcome::Hold);
  EXPECT_EQ(q.graph.size(), 5u);
  EXPECT_TRUE(check_invariants(q).empty());
  EXPECT_TRUE(equivalent(p, q, Outcome::Hold));
}

// Two commuting weight-3 measurements behind Prep(X0|Y0).
TEST(Opt, StabilizerShrinksCommutingMeasurements) {
  std::vector<Node> ns{Node::preparation(P("X0", 3), P("Y0", 3)), Node::measurement(P("Y0X1Z2", 3), 0),
                       Node::measurement(P("X0Y1Z2", 3), 1)};
  CompiledProgram p = compile_nodes(3, 2, ns);
  for (Outcome o : {Outcome::Hold, Outcome::Release}) {
    CompiledProgram q = optimize(p, o);
    MeasurementLoad a = measurement_load(p.graph), b = measurement_load(q.graph);
    EXPECT_LE(b.count, a.count);
    EXPECT_LT(b.weight, a.weight);
    EXPECT_TRUE(equivalent(p, q, o));
  }
}

TEST(Opt, EmptyProgram) {
  CompiledProgram p = compile_nodes(2, 0, {});
  for (Outcome o : {Outcome::Hold, Outcome::Release}) {
    CompiledProgram q = optimize(p, o);
    EXPECT_TRUE(q.graph.empty());
    EXPECT_TRUE(q.frame.is_identity());
  }
}

TEST(Opt, TraceReportsRewrites) {
  std::vector<std::string> lines;
  optimize(circuit_to_graph(parse_circuit(kDemo)), Outcome::Release,
           [&](std::string_view s) { lines.emplace_back(s); });
  ASSERT_FALSE(lines.empty());
  EXPECT_TRUE(std::any_of(lines.begin(), lines.end(), [](const std::string& l) { return l.rfind("measure:", 0) == 0; }));
}

class OptRandom : public ::testing::TestWithParam<Outcome> {};

TEST_P(OptRandom, EquivalentMonotoneIdempotent) {
  const Outcome o = GetParam();
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    CompiledProgram p = circuit_to_graph(random_circuit(4, 30, seed));
    CompiledProgram q = optimize(p, o);
    EXPECT_TRUE(check_invariants(q).empty()) << "seed " << seed;
    EXPECT_TRUE(equivalent(p, q, o, seed)) << "seed " << seed;
    if (o == Outcome::Release) {
      MeasurementLoad a = measurement_load(p.graph), b = measurement_load(q.graph);
      EXPECT_LE(b.count, a.count) << "seed " << seed;
      EXPECT_LE(b.weight, a.weight) << "seed " << seed;
    }
    EXPECT_EQ(fingerprint(optimize(q, o)), fingerprint(q)) << "seed " << seed;
  }
}

INSTANTIATE_TEST_SUITE_P(Outcomes, OptRandom, ::testing::Values(Outcome::Hold, Outcome::Release),
                         [](const auto& info) { return info.param == Outcome::Hold ? "Hold" : "Release"; });

}  // namespace
