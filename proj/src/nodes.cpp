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

#include "pcoast/nodes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace pcoast {

std::string default_cvar_name(Cvar c) { return "c" + std::to_string(c); }

namespace {

// Symmetric difference of sorted vectors.
std::vector<Cvar> xor_sources(const std::vector<Cvar>& a, const std::vector<Cvar>& b) {
  std::vector<Cvar> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Cvar> normalize_sources(std::vector<Cvar> s) {
  std::sort(s.begin(), s.end());
  std::vector<Cvar> out;
  for (std::size_t k = 0; k < s.size();) {
    std::size_t run = k;
    while (run < s.size() && s[run] == s[k]) ++run;
    if ((run - k) % 2 == 1) out.push_back(s[k]);
    k = run;
  }
  return out;
}

std::string fmt_angle(double theta) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", theta);
  return buf;
}

}  // namespace

Msf Msf::single(Cvar target, std::vector<Cvar> sources, bool constant) {
  Msf mu;
  mu.set(target, std::move(sources), constant);
  return mu;
}

void Msf::set(Cvar target, std::vector<Cvar> sources, bool constant) {
  MsfAssignment a{target, normalize_sources(std::move(sources)), constant};
  auto it = std::lower_bound(assignments_.begin(), assignments_.end(), target,
                             [](const MsfAssignment& x, Cvar t) { return x.target < t; });
  if (it != assignments_.end() && it->target == target) {
    *it = std::move(a);
  } else {
    assignments_.insert(it, std::move(a));
  }
}

const MsfAssignment* Msf::find(Cvar target) const {
  auto it = std::lower_bound(assignments_.begin(), assignments_.end(), target,
                             [](const MsfAssignment& x, Cvar t) { return x.target < t; });
  if (it != assignments_.end() && it->target == target) return &*it;
  return nullptr;
}

Assignment Msf::apply(const Assignment& m) const {
  Assignment out = m;
  for (const auto& a : assignments_) {
    bool v = a.constant;
    for (Cvar s : a.sources) {
      auto it = m.find(s);
      if (it == m.end()) throw std::out_of_range("measurement space function reads unassigned " + default_cvar_name(s));
      v ^= it->second;
    }
    out[a.target] = v;
  }
  return out;
}

Msf Msf::compacted() const {
  Msf out;
  for (const auto& a : assignments_) {
    if (!a.constant && a.sources.size() == 1 && a.sources[0] == a.target) continue;
    out.assignments_.push_back(a);
  }
  return out;
}

std::string Msf::str(const std::function<std::string(Cvar)>& name) const {
  std::ostringstream out;
  bool first = true;
  for (const auto& a : assignments_) {
    if (!first) out << "; ";
    first = false;
    out << name(a.target) << " := ";
    bool any = false;
    for (Cvar s : a.sources) {
      if (any) out << " + ";
      out << name(s);
      any = true;
    }
    if (a.constant) {
      if (any) out << " + ";
      out << "1";
      any = true;
    }
    if (!any) out << "0";
  }
  return out.str();
}

Msf compose(const Msf& mu2, const Msf& mu1) {
  Msf out;
  for (const auto& a : mu1.assignments()) {
    if (!mu2.find(a.target)) out.set(a.target, a.sources, a.constant);
  }
  for (const auto& a : mu2.assignments()) {
    std::vector<Cvar> sources;
    bool constant = a.constant;
    for (Cvar s : a.sources) {
      if (const MsfAssignment* inner = mu1.find(s)) {
        sources = xor_sources(sources, inner->sources);
        constant ^= inner->constant;
      } else {
        sources = xor_sources(sources, {s});
      }
    }
    out.set(a.target, std::move(sources), constant);
  }
  return out;
}

double wrap_angle(double theta) {
  constexpr double two_pi = 2 * std::numbers::pi;
  double r = std::fmod(theta, two_pi);
  if (r <= -std::numbers::pi) r += two_pi;
  if (r > std::numbers::pi) r -= two_pi;
  return r;
}

Node Node::rotation(const Pauli& axis, double theta) {
  if (!axis.is_hermitian()) throw std::invalid_argument("rotation axis must be Hermitian: " + axis.str());
  if (!std::isfinite(theta)) throw std::invalid_argument("rotation angle must be finite");
  if (axis.is_identity()) return Node::frame(PauliFrame::identity(axis.n_qubits()));
  Pauli p = axis;
  if (p.sign_bit()) {
    p = p.negated();
    theta = -theta;
  }
  if (auto k = clifford_quarter_turns(theta)) return Node::frame(rotation_frame(p, *k));
  return Node(Rotation{std::move(p), wrap_angle(theta)});
}

Node Node::preparation(Pauli pz, Pauli px) {
  require_same_width(pz.n_qubits(), px.n_qubits(), "preparation");
  if (!pz.is_hermitian() || !px.is_hermitian() || commutator_lambda(pz, px) != 1) {
    throw std::invalid_argument("preparation needs anticommuting Hermitian Paulis: " + pz.str() + " | " + px.str());
  }
  return Node(Preparation{std::move(pz), std::move(px)});
}

Node Node::measurement(Pauli axis, Cvar c) {
  if (!axis.is_hermitian() || axis.is_identity()) {
    throw std::invalid_argument("measurement needs a non-identity Hermitian Pauli: " + axis.str());
  }
  return Node(Measurement{std::move(axis), c});
}

std::size_t Node::n_qubits() const {
  return std::visit(
      [](const auto& v) -> std::size_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rotation> || std::is_same_v<T, Measurement>) {
          return v.axis.n_qubits();
        } else if constexpr (std::is_same_v<T, Preparation>) {
          return v.pz.n_qubits();
        } else if constexpr (std::is_same_v<T, FrameNode>) {
          return v.frame.n_qubits();
        } else {
          return 0;
        }
      },
      v_);
}

std::vector<Pauli> Node::paulis() const {
  if (is_rotation()) return {as_rotation().axis};
  if (is_measurement()) return {as_measurement().axis};
  if (is_preparation()) return {as_preparation().pz, as_preparation().px};
  return {};
}

std::string Node::str() const {
  if (is_rotation()) return "R[" + as_rotation().axis.str() + "](" + fmt_angle(as_rotation().theta) + ")";
  if (is_preparation()) return "Prep(" + as_preparation().pz.str() + "|" + as_preparation().px.str() + ")";
  if (is_measurement()) {
    return "M[" + default_cvar_name(as_measurement().cvar) + "](" + as_measurement().axis.str() + ")";
  }
  if (is_frame()) {
    std::string s = "Frame{";
    const auto& rows = as_frame().frame.rows();
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q) s += "; ";
      s += rows[q].first.str() + ", " + rows[q].second.str();
    }
    return s + "}";
  }
  return "Msf{" + as_msf().mu.str() + "}";
}

bool Node::operator==(const Node& other) const {
  if (v_.index() != other.v_.index()) return false;
  if (is_rotation()) {
    return as_rotation().axis == other.as_rotation().axis &&
           std::abs(as_rotation().theta - other.as_rotation().theta) < 1e-12;
  }
  if (is_preparation()) {
    return as_preparation().pz == other.as_preparation().pz && as_preparation().px == other.as_preparation().px;
  }
  if (is_measurement()) {
    return as_measurement().axis == other.as_measurement().axis && as_measurement().cvar == other.as_measurement().cvar;
  }
  if (is_frame()) return as_frame().frame == other.as_frame().frame;
  return as_msf().mu == other.as_msf().mu;
}

bool pauli_commutes_with(const Pauli& q, const Node& n) {
  if (n.is_msf()) return true;
  if (n.is_frame()) return n.as_frame().frame.fixes(q);
  for (const Pauli& p : n.paulis()) {
    if (commutator_lambda(q, p)) return false;
  }
  return true;
}

bool nodes_commute(const Node& a, const Node& b) {
  if (a.is_msf() || b.is_msf()) {
    const Node& other = a.is_msf() ? b : a;
    return !(other.is_msf() || other.is_measurement());
  }
  if (a.is_frame() && b.is_frame()) {
    const PauliFrame& fa = a.as_frame().frame;
    const PauliFrame& fb = b.as_frame().frame;
    return compose(fa, fb) == compose(fb, fa);
  }
  if (a.is_frame()) {
    for (const Pauli& p : b.paulis()) {
      if (!a.as_frame().frame.fixes(p)) return false;
    }
    return true;
  }
  for (const Pauli& p : a.paulis()) {
    if (!pauli_commutes_with(p, b)) return false;
  }
  return true;
}

Node push_through_frame(const PauliFrame& f, const Node& n) {
  if (n.is_rotation()) return Node::rotation(f.lookup(n.as_rotation().axis), n.as_rotation().theta);
  if (n.is_preparation()) {
    return Node::preparation(f.lookup(n.as_preparation().pz), f.lookup(n.as_preparation().px));
  }
  if (n.is_measurement()) return Node::measurement(f.lookup(n.as_measurement().axis), n.as_measurement().cvar);
  if (n.is_frame()) return Node::frame(compose(compose(inverse(f), n.as_frame().frame), f));
  return n;
}

std::optional<MergeResult> try_merge(const Node& a, const Node& b) {
  if (a.is_rotation() && b.is_rotation()) {
    const Rotation& ra = a.as_rotation();
    const Rotation& rb = b.as_rotation();
    if (!ra.axis.same_letters(rb.axis)) return std::nullopt;
    double t = rb.axis.sign_bit() == ra.axis.sign_bit() ? rb.theta : -rb.theta;
    Node merged = Node::rotation(ra.axis, ra.theta + t);
    MergeResult r;
    if (!(merged.is_frame() && merged.as_frame().frame.is_identity())) r.replacement.push_back(std::move(merged));
    return r;
  }
  if (a.is_preparation() && b.is_preparation()) {
    const Preparation& pa = a.as_preparation();
    const Preparation& pb = b.as_preparation();
    if (!pa.pz.same_letters(pb.pz)) return std::nullopt;
    // The second collapse is already satisfied; a flipped sign leaves a Pauli correction.
    MergeResult r{{a}, std::nullopt};
    if (pa.pz.sign_bit() != pb.pz.sign_bit()) r.replacement.push_back(Node::frame(pauli_gate_frame(pb.px)));
    return r;
  }
  if (a.is_preparation() && b.is_rotation()) {
    if (!a.as_preparation().pz.same_letters(b.as_rotation().axis)) return std::nullopt;
    return MergeResult{{a}, std::nullopt};
  }
  if (a.is_measurement() && b.is_measurement()) {
    const Measurement& ma = a.as_measurement();
    const Measurement& mb = b.as_measurement();
    if (!ma.axis.same_letters(mb.axis)) return std::nullopt;
    bool flip = ma.axis.sign_bit() != mb.axis.sign_bit();
    return MergeResult{{a}, Msf::single(mb.cvar, {ma.cvar}, flip)};
  }
  if (a.is_preparation() && b.is_measurement()) {
    const Preparation& p = a.as_preparation();
    const Measurement& m = b.as_measurement();
    if (!p.pz.same_letters(m.axis)) return std::nullopt;
    bool bit = p.pz.sign_bit() != m.axis.sign_bit();
    return MergeResult{{a}, Msf::single(m.cvar, {}, bit)};
  }
  if (a.is_rotation() && b.is_measurement()) {
    if (!a.as_rotation().axis.same_letters(b.as_measurement().axis)) return std::nullopt;
    return MergeResult{{b}, std::nullopt};
  }
  if (a.is_frame() && b.is_frame()) {
    return MergeResult{{Node::frame(compose(b.as_frame().frame, a.as_frame().frame))}, std::nullopt};
  }
  if (a.is_msf() && b.is_msf()) {
    return MergeResult{{Node::msf(compose(b.as_msf().mu, a.as_msf().mu))}, std::nullopt};
  }
  return std::nullopt;
}

}  // namespace pcoast
