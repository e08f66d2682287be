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

#ifndef PCOAST_NODES_HPP
#define PCOAST_NODES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pcoast/frame.hpp"
#include "pcoast/pauli.hpp"

namespace pcoast {

/// Classical variable id. User-declared bits come first; fresh ones follow.
using Cvar = std::uint32_t;
/// A point of the measurement space: the bits assigned so far.
using Assignment = std::map<Cvar, bool>;

std::string default_cvar_name(Cvar c);

/// target := (xor of sources) xor constant.
struct MsfAssignment {
  Cvar target = 0;
  std::vector<Cvar> sources;  // sorted, no repeats
  bool constant = false;

  bool operator==(const MsfAssignment&) const = default;
};

/// Affine GF(2) map on the measurement space. All right-hand sides read the
/// input assignment; targets not listed pass through unchanged.
class MeasurementSpaceFunction {
 public:
  MeasurementSpaceFunction() = default;
  static MeasurementSpaceFunction single(Cvar target, std::vector<Cvar> sources, bool constant);

  /// Sets (or replaces) the right-hand side for target. Repeated sources cancel.
  void set(Cvar target, std::vector<Cvar> sources, bool constant);
  const MsfAssignment* find(Cvar target) const;
  const std::vector<MsfAssignment>& assignments() const { return assignments_; }
  bool empty() const { return assignments_.empty(); }

  /// Throws std::out_of_range when a source is not assigned in m.
  Assignment apply(const Assignment& m) const;
  /// Drops "c := c" entries.
  MeasurementSpaceFunction compacted() const;

  std::string str(const std::function<std::string(Cvar)>& name = default_cvar_name) const;
  bool operator==(const MeasurementSpaceFunction&) const = default;

 private:
  std::vector<MsfAssignment> assignments_;  // sorted by target
};

using Msf = MeasurementSpaceFunction;

/// mu2 after mu1.
Msf compose(const Msf& mu2, const Msf& mu1);

struct Rotation {
  Pauli axis;  // Hermitian, phase +1 after normalization
  double theta = 0.0;
};
struct Preparation {
  Pauli pz;
  Pauli px;
};
struct Measurement {
  Pauli axis;  // Hermitian, sign kept
  Cvar cvar = 0;
};
struct FrameNode {
  PauliFrame frame;
};
struct MsfNode {
  Msf mu;
};

/// One of the five node kinds.
class Node {
 public:
  using Variant = std::variant<Rotation, Preparation, Measurement, FrameNode, MsfNode>;

  Node() = default;
  Node(Rotation r) : v_(std::move(r)) {}
  Node(Preparation p) : v_(std::move(p)) {}
  Node(Measurement m) : v_(std::move(m)) {}
  Node(FrameNode f) : v_(std::move(f)) {}
  Node(MsfNode m) : v_(std::move(m)) {}

  /// Rotation with the sign folded into the angle and the angle wrapped to
  /// (-pi, pi]. Multiples of pi/2 come back as a frame node.
  static Node rotation(const Pauli& axis, double theta);
  static Node preparation(Pauli pz, Pauli px);
  static Node measurement(Pauli axis, Cvar c);
  static Node frame(PauliFrame f) { return Node(FrameNode{std::move(f)}); }
  static Node msf(Msf mu) { return Node(MsfNode{std::move(mu)}); }

  bool is_rotation() const { return std::holds_alternative<Rotation>(v_); }
  bool is_preparation() const { return std::holds_alternative<Preparation>(v_); }
  bool is_measurement() const { return std::holds_alternative<Measurement>(v_); }
  bool is_frame() const { return std::holds_alternative<FrameNode>(v_); }
  bool is_msf() const { return std::holds_alternative<MsfNode>(v_); }

  const Rotation& as_rotation() const { return std::get<Rotation>(v_); }
  const Preparation& as_preparation() const { return std::get<Preparation>(v_); }
  const Measurement& as_measurement() const { return std::get<Measurement>(v_); }
  const FrameNode& as_frame() const { return std::get<FrameNode>(v_); }
  const MsfNode& as_msf() const { return std::get<MsfNode>(v_); }
  const Variant& variant() const { return v_; }

  /// Width of the node's Paulis/frame; 0 for a measurement space function.
  std::size_t n_qubits() const;
  /// Paulis that define the node (one for singlets, two for preparations).
  std::vector<Pauli> paulis() const;

  std::string str() const;

  /// Structural equality; rotation angles compared to 1e-12.
  bool operator==(const Node& other) const;

 private:
  Variant v_;
};

/// Wraps theta into (-pi, pi].
double wrap_angle(double theta);

/// Q ~ n: Q commutes with the node.
bool pauli_commutes_with(const Pauli& q, const Node& n);
/// Conservative commutation relation between nodes.
bool nodes_commute(const Node& a, const Node& b);

/// F; n == F(n); F.
Node push_through_frame(const PauliFrame& f, const Node& n);

struct MergeResult {
  std::vector<Node> replacement;  // 0..2 nodes, may include a frame
  std::optional<Msf> side_msf;
};

/// Merge of a (earlier) with b (later) if one of the rewrite rules applies.
std::optional<MergeResult> try_merge(const Node& a, const Node& b);

}  // namespace pcoast

#endif  // PCOAST_NODES_HPP
