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

#ifndef PCOAST_TESTS_RULES_HPP
#define PCOAST_TESTS_RULES_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "pcoast/nodes.hpp"
#include "pcoast/sim.hpp"

namespace rules {

using namespace pcoast;

// a and b act identically on |0>, the maximally mixed state and random states.
inline bool same_action(std::size_t n, const std::vector<Node>& a, const std::vector<Node>& b,
                        Outcome o = Outcome::Hold) {
  auto run = [](const std::vector<Node>& seq) { return [seq](const CqState& s) { return run_nodes(s, seq); }; };
  return check_equivalent(n, 1000, run(a), run(b), o, 7).equivalent;
}

inline std::vector<Node> apply_merge(const MergeResult& m) {
  std::vector<Node> out = m.replacement;
  if (m.side_msf) out.push_back(Node::msf(*m.side_msf));
  return out;
}

struct Gen {
  std::mt19937_64 rng;
  std::size_t n;
  explicit Gen(std::uint64_t seed, std::size_t width = 3) : rng(seed), n(width) {}

  Pauli pauli() { return oracle::random_pauli(n, rng, false); }
  Pauli unsigned_pauli() { return pauli().unsigned_letters(); }
  double angle() { return std::uniform_real_distribution<double>(0.1, 1.4)(rng); }
  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng) != 0; }
  Node rotation() { return Node::rotation(unsigned_pauli(), angle()); }
  Node preparation() {
    auto [z, x] = oracle::random_anticommuting(n, rng);
    if (z.is_identity()) return preparation();
    return Node::preparation(z, x.unsigned_letters());
  }
  Node measurement(Cvar c) { return Node::measurement(pauli(), c); }
  Node frame() { return Node::frame(oracle::random_clifford(n, 6, rng).frame); }
};

constexpr int kMergeRules = 8;

struct Outcome3 {
  bool merged = false;
  bool sound = false;
  std::string what;
};

// One random instance of merge rule `rule`: Rot;Rot, Prep;Prep, Prep;Rot, Meas;Meas,
// Prep;Meas, Rot;Meas, F;F, mu;mu.
inline Outcome3 check_merge(Gen& g, int rule) {
  Node a, b;
  std::vector<Node> prefix;
  Pauli p = g.unsigned_pauli();
  Pauli s = g.coin() ? p : p.negated();
  switch (rule) {
    case 0: a = Node::rotation(p, g.angle()); b = Node::rotation(s, g.angle()); break;
    case 1: {
      a = g.preparation();
      Pauli z = a.as_preparation().pz;
      Pauli x2;
      do x2 = g.unsigned_pauli(); while (commute(z, x2));
      b = Node::preparation(g.coin() ? z : z.negated(), x2);
      break;
    }
    case 2:
      a = g.preparation();
      b = Node::rotation(a.as_preparation().pz.unsigned_letters(), g.angle());
      break;
    case 3: a = Node::measurement(s, 0); b = Node::measurement(g.coin() ? p : p.negated(), 1); break;
    case 4: {
      a = g.preparation();
      Pauli z = a.as_preparation().pz;
      b = Node::measurement(g.coin() ? z : z.negated(), 0);
      break;
    }
    case 5: a = Node::rotation(p, g.angle()); b = Node::measurement(s, 0); break;
    case 6: a = g.frame(); b = g.frame(); break;
    default:
      prefix = {Node::measurement(p, 0), Node::measurement(g.unsigned_pauli(), 1)};
      a = Node::msf(Msf::single(2, {0, 1}, g.coin()));
      b = Node::msf(Msf::single(3, {2}, g.coin()));
      break;
  }
  Outcome3 out;
  out.what = a.str() + " ; " + b.str();
  auto m = try_merge(a, b);
  if (!m) return out;
  out.merged = true;
  std::vector<Node> lhs = prefix, rhs = prefix;
  lhs.push_back(a);
  lhs.push_back(b);
  for (const Node& r : apply_merge(*m)) rhs.push_back(r);
  out.sound = same_action(g.n, lhs, rhs);
  return out;
}

// Kind pairs over rotation, preparation, measurement, mu, encoded 4*a + b. mu never
// commutes with a measurement or another mu, so 11, 14 and 15 have nothing to check.
inline const std::vector<int>& commute_kind_pairs() {
  static const std::vector<int> pairs{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13};
  return pairs;
}

// nullopt when the pair is declared non-commuting; otherwise whether swapping is sound.
inline std::optional<bool> check_commute(Gen& g, int kinds, std::string* what = nullptr) {
  auto make = [&](int k, Cvar c) -> Node {
    switch (k) {
      case 0: return g.rotation();
      case 1: return g.preparation();
      case 2: return g.measurement(c);
      default: return Node::msf(Msf::single(5, {c}, g.coin()));
    }
  };
  int ka = kinds / 4, kb = kinds % 4;
  Node a = make(ka, 0), b = make(kb, 1);
  if (what) *what = a.str() + " ; " + b.str();
  if (!nodes_commute(a, b)) return std::nullopt;
  std::vector<Node> prefix;
  // mu reads its source, so make sure it was measured.
  if (ka == 3 || kb == 3) prefix = {Node::measurement(g.unsigned_pauli(), 0), Node::measurement(g.unsigned_pauli(), 1)};
  std::vector<Node> ab = prefix, ba = prefix;
  ab.push_back(a);
  ab.push_back(b);
  ba.push_back(b);
  ba.push_back(a);
  return same_action(g.n, ab, ba);
}

// kind: 0 rotation, 1 preparation, 2 measurement.
inline bool check_push_through(Gen& g, int kind, std::string* what = nullptr) {
  Node f = g.frame();
  Node n = kind == 0 ? g.rotation() : kind == 1 ? g.preparation() : g.measurement(0);
  if (what) *what = n.str();
  Node pushed = push_through_frame(f.as_frame().frame, n);
  return same_action(g.n, {f, n}, {pushed, f});
}

}  // namespace rules

#endif  // PCOAST_TESTS_RULES_HPP
