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

#include "pcoast/synth.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace pcoast {

namespace {

constexpr std::array<Letter, 3> kLetters{Letter::X, Letter::Z, Letter::Y};

Letter letter_xor(Letter a, Letter b) {
  return static_cast<Letter>(static_cast<unsigned>(a) ^ static_cast<unsigned>(b));
}

bool nz(Letter l) { return l != Letter::I; }

const Pauli& singlet_axis(const Node& n) {
  return n.is_rotation() ? n.as_rotation().axis : n.as_measurement().axis;
}

// ---- single-qubit Clifford tables ----

int frame_key(Letter zl, bool zn, Letter xl, bool xn) {
  return ((static_cast<int>(zl) * 2 + zn) * 8) + static_cast<int>(xl) * 2 + xn;
}

int frame_key(const PauliFrame& f) {
  const Pauli& z = f.eff_z(0);
  const Pauli& x = f.eff_x(0);
  return frame_key(z.letter(0), z.sign_bit() != 0, x.letter(0), x.sign_bit() != 0);
}

std::vector<Gate> generators(GateSet set) {
  using std::numbers::pi;
  if (set == GateSet::Generic) {
    std::vector<Gate> out;
    for (GateKind k : {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::X, GateKind::Y, GateKind::Z}) {
      out.push_back(make_gate(k, {0}));
    }
    return out;
  }
  std::vector<Gate> out;
  for (auto [t, p] : std::initializer_list<std::pair<double, double>>{
           {pi / 2, 0.0}, {-pi / 2, 0.0}, {pi / 2, pi / 2}, {-pi / 2, pi / 2}, {pi, 0.0}, {pi, pi / 2}}) {
    out.push_back(make_gate(GateKind::RXY, {0}, {t, p}));
  }
  return out;
}

// Breadth-first over gate words; the first word reaching each of the 24 frames is kept.
const std::map<int, std::vector<Gate>>& clifford_table(GateSet set) {
  static const auto build = [](GateSet s) {
    std::map<int, std::vector<Gate>> table;
    std::vector<Gate> gens = generators(s);
    std::vector<PauliFrame> gen_frames;
    for (const Gate& g : gens) gen_frames.push_back(clifford_gate_frame(g, 1));
    std::deque<std::pair<PauliFrame, std::vector<Gate>>> queue;
    PauliFrame id = PauliFrame::identity(1);
    table[frame_key(id)] = {};
    queue.emplace_back(id, std::vector<Gate>{});
    while (!queue.empty()) {
      auto [f, word] = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        PauliFrame next = compose(gen_frames[k], f);
        int key = frame_key(next);
        if (table.count(key)) continue;
        std::vector<Gate> w = word;
        w.push_back(gens[k]);
        table[key] = w;
        queue.emplace_back(next, std::move(w));
      }
    }
    if (table.size() != 24) throw std::logic_error("single-qubit Clifford table is incomplete");
    return table;
  };
  static const std::map<int, std::vector<Gate>> generic = build(GateSet::Generic);
  static const std::map<int, std::vector<Gate>> native = build(GateSet::Native);
  return set == GateSet::Generic ? generic : native;
}

std::vector<Gate> on_qubit(std::vector<Gate> word, std::size_t q) {
  for (Gate& g : word) g.qubits = {q};
  return word;
}

// Shortest word V with lookup(frame(V), Z) = (-1)^neg l; when want_x, the X image instead.
std::vector<Gate> local_for(GateSet set, std::size_t q, Letter l, bool neg, bool want_x) {
  const std::vector<Gate>* best = nullptr;
  for (Letter other : kLetters) {
    if (other == l) continue;
    for (bool on : {false, true}) {
      int key = want_x ? frame_key(other, on, l, neg) : frame_key(l, neg, other, on);
      const std::vector<Gate>& w = clifford_table(set).at(key);
      if (!best || w.size() < best->size()) best = &w;
    }
  }
  return on_qubit(*best, q);
}

bool touches(const Node& n, const std::vector<std::size_t>& qubits) {
  auto hit = [&qubits](const Pauli& p) {
    for (std::size_t q : qubits) {
      if (p.letter(q) != Letter::I) return true;
    }
    return false;
  };
  if (n.is_rotation()) return hit(n.as_rotation().axis);
  if (n.is_measurement()) return hit(n.as_measurement().axis);
  if (n.is_preparation()) return hit(n.as_preparation().pz) || hit(n.as_preparation().px);
  return true;
}

std::size_t only_qubit(const Pauli& p) {
  for (std::size_t q = 0; q < p.n_qubits(); ++q) {
    if (p.letter(q) != Letter::I) return q;
  }
  throw std::logic_error("identity Pauli has no support");
}

std::size_t only_qubit(const Pauli& p, const Pauli& q) {
  for (std::size_t k = 0; k < p.n_qubits(); ++k) {
    if (p.letter(k) != Letter::I || q.letter(k) != Letter::I) return k;
  }
  throw std::logic_error("identity pair has no support");
}

int singlet_delta(const TqeGate& g, Letter a, Letter b) {
  auto [a2, b2] = tqe_letters(g, a, b);
  return static_cast<int>(nz(a2)) + nz(b2) - nz(a) - nz(b);
}

int factor_delta(const TqeGate& g, Letter pa, Letter pb, Letter qa, Letter qb) {
  auto [pa2, pb2] = tqe_letters(g, pa, pb);
  auto [qa2, qb2] = tqe_letters(g, qa, qb);
  LocalSupport si = local_support(pa, qa), sj = local_support(pb, qb);
  LocalSupport ti = local_support(pa2, qa2), tj = local_support(pb2, qb2);
  int ddet = static_cast<int>(ti.det()) + tj.det() - si.det() - sj.det();
  int dnz = static_cast<int>(ti.nonzero()) + tj.nonzero() - si.nonzero() - sj.nonzero();
  return ddet / 2 + dnz;
}

// Weighted letter histograms of a node population on one qubit pair.
struct PairHistogram {
  std::array<double, 16> singlet{};
  std::array<double, 256> factor{};

  void add_singlet(const Pauli& p, std::size_t i, std::size_t j, double w) {
    singlet[static_cast<unsigned>(p.letter(i)) * 4 + static_cast<unsigned>(p.letter(j))] += w;
  }
  void add_factor(const Pauli& p, const Pauli& q, std::size_t i, std::size_t j, double w) {
    unsigned k = static_cast<unsigned>(p.letter(i)) * 64 + static_cast<unsigned>(p.letter(j)) * 16 +
                 static_cast<unsigned>(q.letter(i)) * 4 + static_cast<unsigned>(q.letter(j));
    factor[k] += w;
  }
  double delta(const TqeGate& g) const {
    double d = 0;
    for (unsigned k = 0; k < 16; ++k) {
      if (singlet[k] != 0) d += singlet[k] * singlet_delta(g, static_cast<Letter>(k / 4), static_cast<Letter>(k % 4));
    }
    for (unsigned k = 0; k < 256; ++k) {
      if (factor[k] != 0) {
        d += factor[k] * factor_delta(g, static_cast<Letter>(k / 64), static_cast<Letter>((k / 16) % 4),
                                      static_cast<Letter>((k / 4) % 4), static_cast<Letter>(k % 4));
      }
    }
    return d;
  }
};

class Engine {
 public:
  Engine(std::size_t n, const SearchConfig& cfg, bool track_frame)
      : n_(n), cfg_(cfg), track_frame_(track_frame), graph_(n), frame_(PauliFrame::identity(n)), frontier_(n, 0) {
    circuit_.n_qubits = n;
  }

  PcoastGraph& graph() { return graph_; }
  PauliFrame& frame() { return frame_; }
  Circuit& circuit() { return circuit_; }
  std::size_t tqe_count() const { return tqe_count_; }

  void search(bool defer_terminal_measurements, bool frame_penalty) {
    for (;;) {
      sweep(defer_terminal_measurements);
      std::vector<NodeId> live;
      for (NodeId id : graph_.begin_set()) {
        if (!deferred(id, defer_terminal_measurements)) live.push_back(id);
      }
      if (live.empty()) break;
      std::size_t best = SIZE_MAX;
      for (NodeId id : live) best = std::min(best, node_cost(graph_.node(id)));
      std::vector<TqeGate> candidates;
      std::set<TqeGate> seen;
      for (NodeId id : live) {
        if (node_cost(graph_.node(id)) != best) continue;
        for (const TqeGate& g : reduce_node(graph_.node(id))) {
          if (seen.insert(g).second) candidates.push_back(g);
        }
      }
      std::vector<NodeId> begin = graph_.begin_set();
      add_tqe(cheapest(candidates, std::set<NodeId>(begin.begin(), begin.end()), frame_penalty, {}));
    }
  }

  std::vector<std::size_t> synthesize_frame() {
    std::vector<bool> done(n_, false);
    std::vector<std::size_t> perm(n_, 0);
    for (;;) {
      for (std::size_t r = 0; r < n_; ++r) {
        if (done[r]) continue;
        const Pauli z = frame_.eff_z(r);
        const Pauli x = frame_.eff_x(r);
        if (factor_cost(z, x) != 0) continue;
        std::size_t k = only_qubit(z, x);
        int key = frame_key(z.letter(k), z.sign_bit() != 0, x.letter(k), x.sign_bit() != 0);
        for (const Gate& g : on_qubit(clifford_table(cfg_.gateset).at(key), k)) emit_clifford(g);
        done[r] = true;
        perm[r] = k;
      }
      std::vector<std::size_t> open;
      for (std::size_t r = 0; r < n_; ++r) {
        if (!done[r]) open.push_back(r);
      }
      if (open.empty()) break;
      std::size_t best = SIZE_MAX;
      for (std::size_t r : open) best = std::min(best, factor_cost(frame_.eff_z(r), frame_.eff_x(r)));
      std::vector<TqeGate> candidates;
      std::set<TqeGate> seen;
      for (std::size_t r : open) {
        if (factor_cost(frame_.eff_z(r), frame_.eff_x(r)) != best) continue;
        for (const TqeGate& g : reduce_factor(frame_.eff_z(r), frame_.eff_x(r))) {
          if (seen.insert(g).second) candidates.push_back(g);
        }
      }
      add_tqe(cheapest(candidates, {}, true, open));
    }
    if (frame_ != permutation_frame(perm)) throw std::logic_error("frame synthesis left a non-permutation residue");
    return perm;
  }

  void emit_swaps(const std::vector<std::size_t>& perm) {
    for (auto [a, b] : permutation_swaps(perm)) {
      if (cfg_.gateset == GateSet::Generic) {
        emit_clifford(make_gate(GateKind::SWAP, {a, b}));
        continue;
      }
      for (auto [c, t] : {std::pair{a, b}, std::pair{b, a}, std::pair{a, b}}) exact_cnot(c, t);
    }
    if (!frame_.is_identity()) throw std::logic_error("swap emission left a residual frame");
  }

 private:
  bool deferred(NodeId id, bool defer) const {
    return defer && graph_.node(id).is_measurement() && graph_.succs(id).empty();
  }

  void sweep(bool defer) {
    bool emitted = true;
    while (emitted) {
      emitted = false;
      for (NodeId id : graph_.begin_set()) {
        if (!graph_.contains(id) || deferred(id, defer)) continue;
        if (!graph_.preds(id).empty() || node_cost(graph_.node(id)) != 0) continue;
        emit_node(id);
        emitted = true;
      }
    }
  }

  void emit(const Gate& g) {
    std::size_t t = 0;
    for (std::size_t q : g.qubits) t = std::max(t, frontier_[q]);
    ++t;
    for (std::size_t q : g.qubits) frontier_[q] = t;
    depth_ = std::max(depth_, t);
    circuit_.gates.push_back(g);
  }

  // d;G;F becomes G';compose(F, d).
  void absorb(const PauliFrame& d, const std::vector<std::size_t>& qubits) {
    for (NodeId id : graph_.ids()) {
      const Node& n = graph_.node(id);
      if (touches(n, qubits)) graph_.set_node_same_commutation(id, push_through_frame(d, n));
    }
    if (track_frame_) frame_ = compose(frame_, d);
  }

  static bool self_inverse(GateKind k) {
    switch (k) {
      case GateKind::H:
      case GateKind::X:
      case GateKind::Y:
      case GateKind::Z:
      case GateKind::CNOT:
      case GateKind::CZ:
      case GateKind::SWAP:
      case GateKind::TQE:
        return true;
      default:
        return false;
    }
  }

  PauliFrame inverse_frame(const Gate& g) const {
    PauliFrame f = clifford_gate_frame(g, n_);
    return self_inverse(g.kind) ? f : inverse(f);
  }

  void emit_clifford(const Gate& g) {
    emit(g);
    absorb(inverse_frame(g), g.qubits);
  }

  void exact_cnot(std::size_t c, std::size_t t) {
    // V^dag Z V = X on the target, so V^-1 CZ V is CNOT.
    std::vector<Gate> v = local_for(cfg_.gateset, t, Letter::X, false, false);
    PauliFrame fv = PauliFrame::identity(1);
    for (const Gate& g : on_qubit(v, 0)) fv = compose(clifford_gate_frame(g, 1), fv);
    std::vector<Gate> v_inv = on_qubit(clifford_table(cfg_.gateset).at(frame_key(inverse(fv))), t);
    for (const Gate& g : v) emit_clifford(g);
    emit_clifford(make_gate(GateKind::CZ, {c, t}));
    for (const Gate& g : v_inv) emit_clifford(g);
  }

  void add_tqe(const TqeGate& t) {
    ++tqe_count_;
    const GateSet set = cfg_.gateset;
    std::vector<Gate> best;
    bool have = false;
    auto consider = [&](std::vector<Gate> seq) {
      if (!have || seq.size() < best.size()) {
        best = std::move(seq);
        have = true;
      }
    };
    if (set == GateSet::Generic) {
      auto cnot = [&](std::size_t c, Letter lc, std::size_t x, Letter lx) {
        std::vector<Gate> seq = local_for(set, c, lc, false, false);
        for (Gate& g : local_for(set, x, lx, false, true)) seq.push_back(g);
        seq.push_back(make_gate(GateKind::CNOT, {c, x}));
        return seq;
      };
      consider(cnot(t.i, t.sigma1, t.j, t.sigma2));
      consider(cnot(t.j, t.sigma2, t.i, t.sigma1));
    }
    std::vector<Gate> cz = local_for(set, t.i, t.sigma1, false, false);
    for (Gate& g : local_for(set, t.j, t.sigma2, false, false)) cz.push_back(g);
    cz.push_back(make_gate(GateKind::CZ, {t.i, t.j}));
    consider(std::move(cz));
    for (const Gate& g : best) emit_clifford(g);
  }

  void emit_node(NodeId id) {
    using std::numbers::pi;
    const Node n = graph_.node(id);
    const bool native = cfg_.gateset == GateSet::Native;
    if (n.is_rotation()) {
      const Pauli& p = n.as_rotation().axis;
      std::size_t q = only_qubit(p);
      double theta = p.sign_bit() ? -n.as_rotation().theta : n.as_rotation().theta;
      Letter l = p.letter(q);
      graph_.remove(id);
      if (!native) {
        GateKind k = l == Letter::X ? GateKind::RX : l == Letter::Y ? GateKind::RY : GateKind::RZ;
        emit(make_gate(k, {q}, {theta}));
      } else if (l == Letter::X) {
        emit(make_gate(GateKind::RXY, {q}, {theta, 0.0}));
      } else if (l == Letter::Y) {
        emit(make_gate(GateKind::RXY, {q}, {theta, pi / 2}));
      } else {
        // RZ(theta) = RXY(pi, -theta/2) followed by X, and the X is left to the graph.
        emit(make_gate(GateKind::RXY, {q}, {pi, -theta / 2}));
        absorb(pauli_gate_frame(Pauli::single(n_, q, Letter::X)), {q});
      }
      return;
    }
    if (n.is_measurement()) {
      const Pauli& a = n.as_measurement().axis;
      std::size_t q = only_qubit(a);
      for (const Gate& g : local_for(cfg_.gateset, q, a.letter(q), a.sign_bit() != 0, false)) emit_clifford(g);
      const Pauli& now = graph_.node(id).as_measurement().axis;
      if (now != Pauli::single(n_, q, Letter::Z)) throw std::logic_error("basis change did not reach Z");
      emit(make_measz(q, n.as_measurement().cvar));
      graph_.remove(id);
      return;
    }
    const Pauli& pz = n.as_preparation().pz;
    std::size_t q = only_qubit(pz);
    std::vector<Gate> v = local_for(cfg_.gateset, q, pz.letter(q), pz.sign_bit() != 0, false);
    graph_.remove(id);
    emit(make_gate(GateKind::PrepZ, {q}));
    // Prep(A|B) = V; PrepZ; V^dag and the leading V is swallowed by the reset.
    for (const Gate& g : v) absorb(inverse_frame(g), g.qubits);
  }

  TqeGate cheapest(const std::vector<TqeGate>& candidates, const std::set<NodeId>& begin, bool frame_penalty,
                   const std::vector<std::size_t>& rows) {
    std::map<std::pair<std::size_t, std::size_t>, PairHistogram> nodes_hist, rows_hist;
    std::vector<NodeId> ids = graph_.ids();
    double free_w = 1.0;
    if (cfg_.free_node_weighting && !begin.empty()) {
      free_w = static_cast<double>(ids.size()) / static_cast<double>(begin.size());
    }
    double node_total = 0;
    for (NodeId id : ids) node_total += begin.count(id) ? free_w : 1.0;
    std::vector<std::size_t> frame_rows = rows;
    if (frame_penalty && frame_rows.empty() && track_frame_) {
      for (std::size_t r = 0; r < n_; ++r) frame_rows.push_back(r);
    }
    if (!frame_penalty) frame_rows.clear();
    for (const TqeGate& g : candidates) {
      auto key = std::make_pair(g.i, g.j);
      if (nodes_hist.count(key)) continue;
      PairHistogram& nh = nodes_hist[key];
      for (NodeId id : ids) {
        const Node& n = graph_.node(id);
        double w = begin.count(id) ? free_w : 1.0;
        if (n.is_preparation()) {
          nh.add_factor(n.as_preparation().pz, n.as_preparation().px, g.i, g.j, w);
        } else {
          nh.add_singlet(singlet_axis(n), g.i, g.j, w);
        }
      }
      PairHistogram& rh = rows_hist[key];
      for (std::size_t r : frame_rows) rh.add_factor(frame_.eff_z(r), frame_.eff_x(r), g.i, g.j, 1.0);
    }
    const TqeGate* best = nullptr;
    double best_cost = 0;
    for (const TqeGate& g : candidates) {
      auto key = std::make_pair(g.i, g.j);
      double c = 0;
      if (node_total > 0) c += nodes_hist[key].delta(g) / node_total;
      if (!frame_rows.empty()) c += rows_hist[key].delta(g) / static_cast<double>(frame_rows.size());
      if (std::max(frontier_[g.i], frontier_[g.j]) < depth_) c -= cfg_.parallelization_credit;
      if (!best || c < best_cost) {
        best = &g;
        best_cost = c;
      }
    }
    if (!best) throw std::logic_error("greedy search found no reducing gate");
    return *best;
  }

  std::size_t n_;
  SearchConfig cfg_;
  bool track_frame_;
  PcoastGraph graph_;
  PauliFrame frame_;
  Circuit circuit_;
  std::vector<std::size_t> frontier_;
  std::size_t depth_ = 0;
  std::size_t tqe_count_ = 0;
};

Cvar cvar_bound(const CompiledProgram& prog) {
  Cvar hi = std::max(prog.next_cvar, prog.n_user_cvars);
  for (const auto& a : prog.mu.assignments()) {
    hi = std::max(hi, a.target + 1);
    for (Cvar s : a.sources) hi = std::max(hi, s + 1);
  }
  return hi;
}

}  // namespace

std::string TqeGate::str() const {
  return std::string("tqe(") + static_cast<char>(std::tolower(letter_char(sigma1))) + "," +
         static_cast<char>(std::tolower(letter_char(sigma2))) + ") q" + std::to_string(i) + " q" + std::to_string(j);
}

std::vector<TqeGate> tqe_gates_on(std::size_t i, std::size_t j) {
  if (i == j) throw std::invalid_argument("TQE needs two distinct qubits");
  if (i > j) std::swap(i, j);
  std::vector<TqeGate> out;
  for (Letter a : kLetters) {
    for (Letter b : kLetters) out.push_back(TqeGate{i, j, a, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Letter, Letter> tqe_letters(const TqeGate& g, Letter a, Letter b) {
  Letter a2 = letter_lambda(b, g.sigma2) ? letter_xor(a, g.sigma1) : a;
  Letter b2 = letter_lambda(a, g.sigma1) ? letter_xor(b, g.sigma2) : b;
  return {a2, b2};
}

Pauli apply_tqe(const TqeGate& g, const Pauli& p) {
  if (!letter_lambda(p.letter(g.i), g.sigma1) && !letter_lambda(p.letter(g.j), g.sigma2)) return p;
  const std::size_t n = p.n_qubits();
  return controlled_pauli_lookup(p, Pauli::single(n, g.i, g.sigma1), Pauli::single(n, g.j, g.sigma2));
}

PauliFrame tqe_frame(const TqeGate& g, std::size_t n) {
  return controlled_pauli_frame(Pauli::single(n, g.i, g.sigma1), Pauli::single(n, g.j, g.sigma2));
}

std::vector<TqeGate> singlet_pair_gates(const Pauli& p, std::size_t i, std::size_t j) {
  std::vector<TqeGate> out;
  if (!nz(p.letter(i)) || !nz(p.letter(j))) return out;
  for (const TqeGate& g : tqe_gates_on(i, j)) {
    if (singlet_delta(g, p.letter(g.i), p.letter(g.j)) < 0) out.push_back(g);
  }
  return out;
}

std::vector<TqeGate> factor_pair_gates(const Pauli& p, const Pauli& q, std::size_t i, std::size_t j) {
  std::vector<TqeGate> out;
  if (i > j) std::swap(i, j);
  SupportClass ci = support_class(p, q, i), cj = support_class(p, q, j);
  bool ss = ci == SupportClass::Strong && cj == SupportClass::Strong;
  bool sw = (ci == SupportClass::Strong && cj == SupportClass::Weak) ||
            (ci == SupportClass::Weak && cj == SupportClass::Strong);
  if (!ss && !sw) return out;
  for (const TqeGate& g : tqe_gates_on(i, j)) {
    auto [pi2, pj2] = tqe_letters(g, p.letter(i), p.letter(j));
    auto [qi2, qj2] = tqe_letters(g, q.letter(i), q.letter(j));
    SupportClass ni = support_class(local_support(pi2, qi2));
    SupportClass nj = support_class(local_support(pj2, qj2));
    if (ss && ni == SupportClass::Weak && nj == SupportClass::Weak) out.push_back(g);
    if (sw && ci == SupportClass::Strong && ni == SupportClass::Strong && nj == SupportClass::None) out.push_back(g);
    if (sw && cj == SupportClass::Strong && nj == SupportClass::Strong && ni == SupportClass::None) out.push_back(g);
  }
  return out;
}

std::vector<TqeGate> reduce_singlet(const Pauli& p) {
  std::vector<std::size_t> s = p.support();
  std::vector<TqeGate> out;
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      for (const TqeGate& g : singlet_pair_gates(p, s[a], s[b])) out.push_back(g);
    }
  }
  return out;
}

std::vector<TqeGate> reduce_factor(const Pauli& p, const Pauli& q) {
  std::vector<std::size_t> s;
  for (std::size_t k = 0; k < p.n_qubits(); ++k) {
    if (nz(p.letter(k)) || nz(q.letter(k))) s.push_back(k);
  }
  std::vector<TqeGate> out;
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      for (const TqeGate& g : factor_pair_gates(p, q, s[a], s[b])) out.push_back(g);
    }
  }
  return out;
}

std::vector<TqeGate> reduce_node(const Node& n) {
  if (node_cost(n) == 0) throw std::invalid_argument("reduce_node: node is already gate-equivalent");
  std::vector<TqeGate> out =
      n.is_preparation() ? reduce_factor(n.as_preparation().pz, n.as_preparation().px) : reduce_singlet(singlet_axis(n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw std::logic_error("reduce_node: no reducing gate for " + n.str());
  return out;
}

PauliFrame clifford_gate_frame(const Gate& g, std::size_t n) {
  if (std::optional<PauliFrame> f = gate_frame(g, n)) return *f;
  PauliFrame acc = PauliFrame::identity(n);
  for (const Node& node : lower_gate(g, n)) {
    if (!node.is_frame()) throw std::invalid_argument("gate is not Clifford: " + std::string(gate_name(g.kind)));
    acc = compose(node.as_frame().frame, acc);
  }
  return acc;
}

std::vector<Gate> local_clifford(GateSet set, std::size_t q, Letter zl, bool zn, Letter xl, bool xn) {
  auto it = clifford_table(set).find(frame_key(zl, zn, xl, xn));
  if (it == clifford_table(set).end()) throw std::invalid_argument("images do not form a single-qubit frame");
  return on_qubit(it->second, q);
}

SearchResult search_nonclifford(const PcoastGraph& g, const PauliFrame& f, Outcome outcome, const SearchConfig& cfg) {
  Engine e(g.n_qubits(), cfg, outcome == Outcome::Hold);
  e.graph() = g;
  e.frame() = f;
  e.search(outcome == Outcome::Release, outcome == Outcome::Hold);
  return SearchResult{e.circuit(), e.graph(), e.frame()};
}

FrameSynthesis synthesize_frame(const PauliFrame& f, const SearchConfig& cfg) {
  Engine e(f.n_qubits(), cfg, true);
  e.frame() = f;
  FrameSynthesis out;
  out.permutation = e.synthesize_frame();
  if (cfg.emit_swaps) {
    e.emit_swaps(out.permutation);
    for (std::size_t k = 0; k < out.permutation.size(); ++k) out.permutation[k] = k;
  }
  out.circuit = e.circuit();
  return out;
}

Synthesis synthesize(const CompiledProgram& prog, Outcome outcome, const SearchConfig& cfg) {
  const bool hold = outcome == Outcome::Hold;
  Engine e(prog.n_qubits, cfg, hold);
  e.graph() = prog.graph;
  e.frame() = hold ? prog.frame : PauliFrame::identity(prog.n_qubits);
  Synthesis out;
  if (hold) {
    e.search(false, true);
    out.permutation = e.synthesize_frame();
    if (cfg.emit_swaps) {
      e.emit_swaps(out.permutation);
      for (std::size_t k = 0; k < out.permutation.size(); ++k) out.permutation[k] = k;
    }
  } else {
    e.search(true, false);
    // The terminal layer commutes; reduce it in place of the discarded frame.
    e.search(false, false);
    out.permutation.resize(prog.n_qubits);
    for (std::size_t k = 0; k < prog.n_qubits; ++k) out.permutation[k] = k;
  }
  out.circuit = e.circuit();
  out.circuit.n_cvars = cvar_bound(prog);
  out.mu = prog.mu;
  out.tqe_count = e.tqe_count();
  out.n_user_cvars = prog.n_user_cvars;
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> permutation_swaps(const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> rest = perm;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < rest.size(); ++a) {
    while (rest[a] != a) {
      std::size_t b = rest[a];
      out.emplace_back(a, b);
      // rest := swap(a, b) o rest
      for (std::size_t& v : rest) {
        if (v == a) {
          v = b;
        } else if (v == b) {
          v = a;
        }
      }
    }
  }
  return out;
}

}  // namespace pcoast
