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

#include "pcoast/graph.hpp"

#include <queue>
#include <sstream>
#include <stdexcept>

#include "pcoast/circuit.hpp"

namespace pcoast {

std::vector<NodeId> PcoastGraph::ids() const {
  std::vector<NodeId> out;
  out.reserve(v_.size());
  for (const auto& [id, _] : v_) out.push_back(id);
  return out;
}

std::size_t PcoastGraph::edge_count() const {
  std::size_t e = 0;
  for (const auto& [_, v] : v_) e += v.out.size();
  return e;
}

NodeId PcoastGraph::insert(Node n) {
  if (n.is_frame() || n.is_msf()) throw std::invalid_argument("graph stores no frame or mu nodes");
  require_same_width(n.n_qubits(), n_, "graph insert");
  NodeId id = next_++;
  Vertex vert{std::move(n), {}, {}};
  for (auto& [other, v] : v_) {
    if (!nodes_commute(v.node, vert.node)) {
      v.out.insert(id);
      vert.in.insert(other);
    }
  }
  v_.emplace(id, std::move(vert));
  return id;
}

void PcoastGraph::remove(NodeId id) {
  auto it = v_.find(id);
  if (it == v_.end()) throw std::out_of_range("remove: no node " + std::to_string(id));
  for (NodeId p : it->second.in) v_.at(p).out.erase(id);
  for (NodeId s : it->second.out) v_.at(s).in.erase(id);
  v_.erase(it);
}

void PcoastGraph::set_node_same_commutation(NodeId id, Node n) { v_.at(id).node = std::move(n); }

void PcoastGraph::set_node_rewired(NodeId id, Node n, const std::set<NodeId>& before) {
  Vertex& self = v_.at(id);
  for (NodeId p : self.in) v_.at(p).out.erase(id);
  for (NodeId s : self.out) v_.at(s).in.erase(id);
  self.in.clear();
  self.out.clear();
  self.node = std::move(n);
  for (auto& [other, v] : v_) {
    if (other == id || nodes_commute(v.node, self.node)) continue;
    if (before.count(other)) {
      v.out.insert(id);
      self.in.insert(other);
    } else {
      v.in.insert(id);
      self.out.insert(other);
    }
  }
}

std::vector<NodeId> PcoastGraph::topological_order() const {
  std::map<NodeId, std::size_t> indeg;
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
  for (const auto& [id, v] : v_) {
    indeg[id] = v.in.size();
    if (v.in.empty()) ready.push(id);
  }
  std::vector<NodeId> order;
  order.reserve(v_.size());
  while (!ready.empty()) {
    NodeId id = ready.top();
    ready.pop();
    order.push_back(id);
    for (NodeId s : v_.at(id).out) {
      if (--indeg[s] == 0) ready.push(s);
    }
  }
  if (order.size() != v_.size()) throw std::logic_error("graph has a cycle");
  return order;
}

std::vector<Node> PcoastGraph::topological_term() const {
  std::vector<Node> out;
  for (NodeId id : topological_order()) out.push_back(node(id));
  return out;
}

std::vector<NodeId> PcoastGraph::begin_set() const {
  std::vector<NodeId> out;
  for (const auto& [id, v] : v_) {
    if (v.in.empty()) out.push_back(id);
  }
  return out;
}

std::vector<NodeId> PcoastGraph::end_set() const {
  std::vector<NodeId> out;
  for (const auto& [id, v] : v_) {
    if (v.out.empty()) out.push_back(id);
  }
  return out;
}

std::set<NodeId> PcoastGraph::ancestors(NodeId id) const {
  std::set<NodeId> seen;
  std::vector<NodeId> stack(v_.at(id).in.begin(), v_.at(id).in.end());
  while (!stack.empty()) {
    NodeId cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur).second) continue;
    for (NodeId p : v_.at(cur).in) stack.push_back(p);
  }
  return seen;
}

std::set<NodeId> PcoastGraph::descendants(NodeId id) const {
  std::set<NodeId> seen;
  std::vector<NodeId> stack(v_.at(id).out.begin(), v_.at(id).out.end());
  while (!stack.empty()) {
    NodeId cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur).second) continue;
    for (NodeId s : v_.at(cur).out) stack.push_back(s);
  }
  return seen;
}

std::string PcoastGraph::dump() const {
  std::ostringstream out;
  for (const auto& [id, v] : v_) out << "node " << id << ": " << v.node.str() << "\n";
  for (const auto& [id, v] : v_) {
    for (NodeId s : v.out) out << "edge " << id << " -> " << s << "\n";
  }
  return out.str();
}

namespace {

// Feeds a node sequence into g the same way the compilation loop does.
// Returns the frame and mu that end up behind the graph.
AddResult add_sequence(PcoastGraph& g, const std::vector<Node>& nodes) {
  AddResult acc{PauliFrame::identity(g.n_qubits()), Msf{}};
  for (const Node& n : nodes) {
    if (n.is_frame()) {
      acc.frame = compose(n.as_frame().frame, acc.frame);
    } else if (n.is_msf()) {
      acc.mu = compose(n.as_msf().mu, acc.mu);
    } else {
      AddResult r = add_node(g, push_through_frame(acc.frame, n));
      acc.frame = compose(acc.frame, r.frame);
      acc.mu = compose(acc.mu, r.mu);
    }
  }
  return acc;
}

}  // namespace

AddResult add_node(PcoastGraph& g, const Node& n) {
  if (n.is_frame()) return {n.as_frame().frame, Msf{}};
  if (n.is_msf()) return {PauliFrame::identity(g.n_qubits()), n.as_msf().mu};
  require_same_width(n.n_qubits(), g.n_qubits(), "add_node");
  for (NodeId id : g.end_set()) {
    std::optional<MergeResult> m = try_merge(g.node(id), n);
    // id is last in the graph, so a commuting n may also go in front of it.
    if (!m && nodes_commute(g.node(id), n)) m = try_merge(n, g.node(id));
    if (!m) continue;
    g.remove(id);
    AddResult r = add_sequence(g, m->replacement);
    if (m->side_msf) r.mu = compose(*m->side_msf, r.mu);
    return r;
  }
  g.insert(n);
  return {PauliFrame::identity(g.n_qubits()), Msf{}};
}

CompiledProgram compile_nodes(std::size_t n_qubits, Cvar n_cvars, const std::vector<Node>& nodes) {
  CompiledProgram prog;
  prog.n_qubits = n_qubits;
  prog.n_user_cvars = n_cvars;
  prog.next_cvar = n_cvars;
  prog.graph = PcoastGraph(n_qubits);
  prog.frame = PauliFrame::identity(n_qubits);
  for (const Node& raw : nodes) {
    Node n = raw;
    if (n.is_measurement()) {
      Cvar c = n.as_measurement().cvar;
      Cvar fresh = prog.fresh_cvar();
      n = Node::measurement(n.as_measurement().axis, fresh);
      prog.mu.set(c, {fresh}, false);
    }
    if (n.is_msf()) {
      prog.mu = compose(n.as_msf().mu, prog.mu);
    } else if (n.is_frame()) {
      prog.frame = compose(n.as_frame().frame, prog.frame);
    } else {
      AddResult r = add_node(prog.graph, push_through_frame(prog.frame, n));
      prog.frame = compose(prog.frame, r.frame);
      prog.mu = compose(prog.mu, r.mu);
    }
  }
  prog.mu = prog.mu.compacted();
  return prog;
}

CompiledProgram circuit_to_graph(const Circuit& c) {
  std::vector<Node> nodes;
  for (const Gate& g : c.gates) {
    for (Node& n : lower_gate(g, c.n_qubits)) nodes.push_back(std::move(n));
  }
  return compile_nodes(c.n_qubits, static_cast<Cvar>(c.n_cvars), nodes);
}

void remerge(CompiledProgram& prog) {
  std::vector<Node> term = prog.graph.topological_term();
  PcoastGraph fresh(prog.n_qubits);
  AddResult r = add_sequence(fresh, term);
  prog.graph = std::move(fresh);
  prog.frame = compose(prog.frame, r.frame);
  prog.mu = compose(prog.mu, r.mu).compacted();
}

std::vector<std::string> check_invariants(const CompiledProgram& prog) {
  std::vector<std::string> bad;
  const PcoastGraph& g = prog.graph;
  if (g.n_qubits() != prog.n_qubits) bad.push_back("graph width differs from program width");
  if (prog.frame.n_qubits() != prog.n_qubits) bad.push_back("terminal frame width differs from program width");
  if (!prog.frame.is_wellformed()) bad.push_back("terminal frame is not well-formed");
  try {
    g.topological_order();
  } catch (const std::logic_error&) {
    bad.push_back("graph has a cycle");
    return bad;
  }
  std::vector<NodeId> ids = g.ids();
  for (NodeId id : ids) {
    const Node& n = g.node(id);
    if (n.n_qubits() != prog.n_qubits) bad.push_back("node " + std::to_string(id) + " has the wrong width");
    if (n.is_frame() || n.is_msf()) bad.push_back("node " + std::to_string(id) + " is a frame or mu inside the graph");
    if (n.is_rotation() && n.as_rotation().axis.sign_bit()) {
      bad.push_back("rotation " + std::to_string(id) + " keeps a negative axis");
    }
    for (NodeId s : g.succs(id)) {
      if (!g.contains(s) || !g.preds(s).count(id)) bad.push_back("edge cache mismatch at " + std::to_string(id));
    }
  }
  for (std::size_t a = 0; a < ids.size(); ++a) {
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      NodeId i = ids[a], j = ids[b];
      bool edge = g.succs(i).count(j) || g.succs(j).count(i);
      bool both = g.succs(i).count(j) && g.succs(j).count(i);
      bool comm = nodes_commute(g.node(i), g.node(j));
      if (both) bad.push_back("two edges between " + std::to_string(i) + " and " + std::to_string(j));
      if (comm && edge) bad.push_back("edge between commuting " + std::to_string(i) + " and " + std::to_string(j));
      if (!comm && !edge) bad.push_back("missing edge between " + std::to_string(i) + " and " + std::to_string(j));
      // Freely mergeable: same neighbourhood, so either order is valid.
      if (!edge && g.preds(i) == g.preds(j) && g.succs(i) == g.succs(j) &&
          (try_merge(g.node(i), g.node(j)) || try_merge(g.node(j), g.node(i)))) {
        bad.push_back("freely mergeable pair " + std::to_string(i) + ", " + std::to_string(j));
      }
    }
  }
  return bad;
}

}  // namespace pcoast
