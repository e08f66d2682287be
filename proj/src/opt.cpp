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

#include "pcoast/opt.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include "pcoast/cost.hpp"

namespace pcoast {

namespace {

constexpr int kMaxRounds = 256;

void emit(const TraceFn& trace, const std::string& line) {
  if (trace) trace(line);
}

// Nodes reachable from a descendant of `prep` that anticommutes with s (inclusive).
std::set<NodeId> blocked_region(const PcoastGraph& g, NodeId prep, const Pauli& s) {
  std::set<NodeId> region;
  for (NodeId d : g.descendants(prep)) {
    if (region.count(d) || pauli_commutes_with(s, g.node(d))) continue;
    region.insert(d);
    for (NodeId e : g.descendants(d)) region.insert(e);
  }
  return region;
}

bool single_reduction(CompiledProgram& prog, NodeId prep, const TraceFn& trace) {
  PcoastGraph& g = prog.graph;
  const Pauli s = g.node(prep).as_preparation().pz;
  for (NodeId id : stabilized_nodes(g, prep)) {
    const Node& n = g.node(id);
    if (n.is_preparation()) continue;
    const Pauli p = n.paulis().front();
    if (!commute(p, s)) continue;
    Pauli q = mul(p, s);
    if (q.weight() >= p.weight()) continue;
    std::string before_str = n.str();
    if (q.is_identity()) {
      if (n.is_measurement()) {
        prog.mu = compose(prog.mu, Msf::single(n.as_measurement().cvar, {}, q.sign_bit() != 0));
      }
      g.remove(id);
      emit(trace, "support: " + before_str + " fixed by " + s.str() + ", removed");
      return true;
    }
    Node replacement =
        n.is_rotation() ? Node::rotation(q, n.as_rotation().theta) : Node::measurement(q, n.as_measurement().cvar);
    std::set<NodeId> before = g.ancestors(prep);
    before.insert(prep);
    for (NodeId a : g.ancestors(id)) before.insert(a);
    emit(trace, "support: " + before_str + " -> " + replacement.str() + " using " + s.str());
    g.set_node_rewired(id, std::move(replacement), before);
    return true;
  }
  return false;
}

// Symplectic pivot: lowest qubit, Z bit before X bit.
std::optional<std::pair<std::size_t, bool>> pivot_of(const Pauli& p) {
  for (std::size_t q = 0; q < p.n_qubits(); ++q) {
    if (p.z(q)) return std::make_pair(q, true);
    if (p.x(q)) return std::make_pair(q, false);
  }
  return std::nullopt;
}

bool has_bit(const Pauli& p, const std::pair<std::size_t, bool>& piv) {
  return piv.second ? p.z(piv.first) : p.x(piv.first);
}

struct Row {
  Pauli pauli;
  std::pair<std::size_t, bool> pivot;
  std::set<Cvar> sources;  // generator cvars folded into this row
};

}  // namespace

std::vector<NodeId> stabilized_nodes(const PcoastGraph& g, NodeId prep) {
  const Pauli& s = g.node(prep).as_preparation().pz;
  std::set<NodeId> skip = blocked_region(g, prep, s);
  for (NodeId a : g.ancestors(prep)) skip.insert(a);
  skip.insert(prep);
  std::vector<NodeId> out;
  for (NodeId id : g.ids()) {
    if (!skip.count(id)) out.push_back(id);
  }
  return out;
}

std::vector<Pauli> terminal_stabilizers(const CompiledProgram& prog) {
  const PcoastGraph& g = prog.graph;
  std::vector<Pauli> out;
  for (NodeId id : g.ids()) {
    const Node& n = g.node(id);
    if (!n.is_preparation()) continue;
    const Pauli& s = n.as_preparation().pz;
    bool clear = true;
    for (NodeId d : g.descendants(id)) {
      if (!pauli_commutes_with(s, g.node(d))) {
        clear = false;
        break;
      }
    }
    if (clear) out.push_back(s);
  }
  return out;
}

bool reduce_node_support(CompiledProgram& prog, const TraceFn& trace) {
  bool any = false;
  for (int round = 0; round < kMaxRounds; ++round) {
    bool changed = false;
    for (NodeId id : prog.graph.ids()) {
      if (!prog.graph.contains(id) || !prog.graph.node(id).is_preparation()) continue;
      while (single_reduction(prog, id, trace)) changed = true;
    }
    if (!changed) break;
    any = true;
    remerge(prog);
  }
  return any;
}

bool reduce_terminal_frame(CompiledProgram& prog, const TraceFn& trace) {
  if (prog.frame.is_identity()) return false;
  std::vector<Pauli> stabs = terminal_stabilizers(prog);
  if (stabs.empty()) return false;
  const std::size_t n = prog.n_qubits;
  std::size_t cost = frame_cost(prog.frame);
  bool any = false;
  while (cost > 0) {
    std::optional<PauliFrame> best;
    std::size_t best_cost = cost;
    std::string best_desc;
    for (const Pauli& s : stabs) {
      for (std::size_t q = 0; q < n; ++q) {
        for (Letter l : {Letter::X, Letter::Z, Letter::Y}) {
          Pauli b = Pauli::single(n, q, l);
          if (!commute(s, b) || s.same_letters(b)) continue;
          // compose(F, V) has rows V.lookup(F rows); V fixes the stabilized subspace.
          std::vector<std::pair<Pauli, Pauli>> rows;
          rows.reserve(n);
          std::size_t c = 0;
          for (const auto& [z, x] : prog.frame.rows()) {
            rows.emplace_back(controlled_pauli_lookup(z, s, b), controlled_pauli_lookup(x, s, b));
            c += factor_cost(rows.back().first, rows.back().second);
            if (c >= best_cost) break;
          }
          if (c < best_cost && rows.size() == n) {
            best_cost = c;
            best = PauliFrame::from_rows(std::move(rows));
            best_desc = s.str() + ", " + b.str();
          }
        }
      }
    }
    if (!best) break;
    emit(trace, "frame: controlled pauli (" + best_desc + ") cost " + std::to_string(cost) + " -> " +
                    std::to_string(best_cost));
    prog.frame = std::move(*best);
    cost = best_cost;
    any = true;
  }
  return any;
}

bool release_prune(CompiledProgram& prog, const TraceFn& trace) {
  bool any = false;
  if (!prog.frame.is_identity()) {
    prog.frame = PauliFrame::identity(prog.n_qubits);
    emit(trace, "prune: terminal frame dropped");
    any = true;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId id : prog.graph.end_set()) {
      if (prog.graph.node(id).is_measurement()) continue;
      emit(trace, "prune: " + prog.graph.node(id).str());
      prog.graph.remove(id);
      changed = any = true;
    }
  }
  return any;
}

bool release_measurement_reduction(CompiledProgram& prog, const TraceFn& trace) {
  PcoastGraph& g = prog.graph;
  std::vector<NodeId> terminal;
  for (NodeId id : g.end_set()) {
    if (g.node(id).is_measurement()) terminal.push_back(id);
  }
  if (terminal.empty()) return false;
  std::vector<Pauli> stabs = terminal_stabilizers(prog);

  bool any = false;
  std::vector<Row> basis;
  auto reduce = [&basis](Pauli p, std::set<Cvar>& sources) {
    for (const Row& r : basis) {
      if (!has_bit(p, r.pivot)) continue;
      p = mul(p, r.pauli);
      for (Cvar c : r.sources) {
        if (!sources.erase(c)) sources.insert(c);
      }
    }
    return p;
  };
  for (const Pauli& s : stabs) {
    std::set<Cvar> src;
    Pauli r = reduce(s, src);
    if (auto piv = pivot_of(r)) basis.push_back(Row{r, *piv, src});
  }
  std::vector<NodeId> generators;
  Msf dependents;
  for (NodeId id : terminal) {
    const Measurement& m = g.node(id).as_measurement();
    std::set<Cvar> src{m.cvar};
    Pauli r = reduce(m.axis, src);
    if (auto piv = pivot_of(r)) {
      basis.push_back(Row{r, *piv, src});
      generators.push_back(id);
      continue;
    }
    // m.axis * (product of rows) = +-I, so the outcome is fixed by the generators.
    src.erase(m.cvar);
    std::vector<Cvar> sources(src.begin(), src.end());
    dependents.set(m.cvar, sources, r.sign_bit() != 0);
    emit(trace, "measure: " + g.node(id).str() + " dependent, " + Msf::single(m.cvar, sources, r.sign_bit() != 0).str());
    g.remove(id);
    any = true;
  }
  if (!dependents.empty()) prog.mu = compose(prog.mu, dependents);

  // Greedy weight reduction against other generators and stabilizers.
  bool improved = true;
  while (improved) {
    improved = false;
    for (NodeId id : generators) {
      const Measurement m = g.node(id).as_measurement();
      std::optional<Pauli> best;
      std::optional<Cvar> best_src;
      for (NodeId other : generators) {
        if (other == id) continue;
        Pauli q = mul(m.axis, g.node(other).as_measurement().axis);
        if (q.weight() < (best ? best->weight() : m.axis.weight())) {
          best = q;
          best_src = g.node(other).as_measurement().cvar;
        }
      }
      for (const Pauli& s : stabs) {
        Pauli q = mul(m.axis, s);
        if (q.weight() < (best ? best->weight() : m.axis.weight())) {
          best = q;
          best_src.reset();
        }
      }
      if (!best || best->is_identity()) continue;
      Cvar fresh = prog.fresh_cvar();
      std::vector<Cvar> sources{fresh};
      if (best_src) sources.push_back(*best_src);
      std::sort(sources.begin(), sources.end());
      Msf step = Msf::single(m.cvar, sources, false);
      Node replacement = Node::measurement(*best, fresh);
      emit(trace, "measure: " + g.node(id).str() + " -> " + replacement.str() + ", " + step.str());
      std::set<NodeId> before;
      for (NodeId other : g.ids()) {
        if (other != id) before.insert(other);
      }
      g.set_node_rewired(id, std::move(replacement), before);
      prog.mu = compose(prog.mu, step);
      improved = any = true;
    }
  }
  if (any) remerge(prog);
  return any;
}

CompiledProgram optimize(CompiledProgram prog, Outcome outcome, const TraceFn& trace) {
  for (int round = 0; round < kMaxRounds; ++round) {
    bool changed = reduce_node_support(prog, trace);
    if (outcome == Outcome::Hold) {
      changed = reduce_terminal_frame(prog, trace) || changed;
    } else {
      changed = release_prune(prog, trace) || changed;
      changed = release_measurement_reduction(prog, trace) || changed;
    }
    if (!changed) break;
  }
  std::size_t before = prog.graph.size();
  remerge(prog);
  if (prog.graph.size() != before) return optimize(std::move(prog), outcome, trace);
  prog.mu = prog.mu.compacted();
  return prog;
}

MeasurementLoad measurement_load(const PcoastGraph& g) {
  MeasurementLoad load;
  for (NodeId id : g.ids()) {
    const Node& n = g.node(id);
    if (!n.is_measurement()) continue;
    ++load.count;
    load.weight += n.as_measurement().axis.weight();
  }
  return load;
}

}  // namespace pcoast
