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

#ifndef PCOAST_GRAPH_HPP
#define PCOAST_GRAPH_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pcoast/frame.hpp"
#include "pcoast/nodes.hpp"

namespace pcoast {

struct Circuit;

using NodeId = std::uint32_t;

/// What a rewrite must preserve: the full state, or only outcome statistics.
enum class Outcome { Hold, Release };

/// DAG over rotation, preparation and measurement nodes. Every pair of
/// non-commuting nodes carries exactly one edge, earlier -> later.
class PcoastGraph {
 public:
  explicit PcoastGraph(std::size_t n_qubits = 0) : n_(n_qubits) {}

  std::size_t n_qubits() const { return n_; }
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  bool contains(NodeId id) const { return v_.count(id) != 0; }
  const Node& node(NodeId id) const { return v_.at(id).node; }
  const std::set<NodeId>& preds(NodeId id) const { return v_.at(id).in; }
  const std::set<NodeId>& succs(NodeId id) const { return v_.at(id).out; }
  std::vector<NodeId> ids() const;
  std::size_t edge_count() const;
  NodeId next_id() const { return next_; }

  /// Appends n as the latest node: edges from every stored node it does not commute with.
  NodeId insert(Node n);
  void remove(NodeId id);

  /// Overwrites a node's value without touching edges. The caller
  /// guarantees commutation with every other node is unchanged.
  void set_node_same_commutation(NodeId id, Node n);
  /// Overwrites a node's value and rebuilds its edges: a non-commuting
  /// neighbour m gets m -> id when m is in `before`, id -> m otherwise.
  void set_node_rewired(NodeId id, Node n, const std::set<NodeId>& before);

  /// Kahn order, smallest id first among ready nodes.
  std::vector<NodeId> topological_order() const;
  std::vector<Node> topological_term() const;
  std::vector<NodeId> begin_set() const;  // indegree 0
  std::vector<NodeId> end_set() const;    // outdegree 0
  std::set<NodeId> ancestors(NodeId id) const;
  std::set<NodeId> descendants(NodeId id) const;

  /// Lines "node <id>: <render>" then "edge <a> -> <b>".
  std::string dump() const;

 private:
  struct Vertex {
    Node node;
    std::set<NodeId> in;
    std::set<NodeId> out;
  };
  std::size_t n_ = 0;
  NodeId next_ = 0;
  std::map<NodeId, Vertex> v_;
};

/// G; F; mu with the graph in front of a single terminal frame and
/// measurement-space function.
struct CompiledProgram {
  std::size_t n_qubits = 0;
  Cvar n_user_cvars = 0;  // ids below this are declared by the input
  Cvar next_cvar = 0;     // fresh-id counter
  PcoastGraph graph;
  PauliFrame frame;
  Msf mu;

  Cvar fresh_cvar() { return next_cvar++; }
};

struct AddResult {
  PauliFrame frame;
  Msf mu;
};

/// G; n == G'; F; mu. The graph is updated in place.
AddResult add_node(PcoastGraph& g, const Node& n);

/// Runs the compilation loop over an already-lowered node list.
CompiledProgram compile_nodes(std::size_t n_qubits, Cvar n_cvars, const std::vector<Node>& nodes);
CompiledProgram circuit_to_graph(const Circuit& c);

/// Re-inserts every node in topological order so merges newly enabled by
/// rewrites are applied. Frames and mu produced on the way fold into the terminal ones.
void remerge(CompiledProgram& prog);

/// Empty when all structural invariants hold.
std::vector<std::string> check_invariants(const CompiledProgram& prog);

}  // namespace pcoast

#endif  // PCOAST_GRAPH_HPP
