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

#include "pcoast/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace pcoast {

CircuitParseError::CircuitParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct KindInfo {
  GateKind kind;
  std::string_view name;
  std::size_t arity;
  std::size_t angles;
};

constexpr KindInfo kKinds[] = {
    {GateKind::PrepZ, "prepz", 1, 0}, {GateKind::PrepX, "prepx", 1, 0}, {GateKind::MeasZ, "measz", 1, 0},
    {GateKind::H, "h", 1, 0},         {GateKind::S, "s", 1, 0},         {GateKind::Sdg, "sdg", 1, 0},
    {GateKind::X, "x", 1, 0},         {GateKind::Y, "y", 1, 0},         {GateKind::Z, "z", 1, 0},
    {GateKind::T, "t", 1, 0},         {GateKind::Tdg, "tdg", 1, 0},     {GateKind::RX, "rx", 1, 1},
    {GateKind::RY, "ry", 1, 1},       {GateKind::RZ, "rz", 1, 1},       {GateKind::RXY, "rxy", 1, 2},
    {GateKind::CNOT, "cnot", 2, 0},   {GateKind::CZ, "cz", 2, 0},       {GateKind::SWAP, "swap", 2, 0},
    {GateKind::TQE, "tqe", 2, 0},
};

const KindInfo& info(GateKind k) {
  for (const auto& i : kKinds) {
    if (i.kind == k) return i;
  }
  throw std::invalid_argument("unknown gate kind");
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

// Recursive-descent evaluator for angle expressions.
class AngleParser {
 public:
  explicit AngleParser(std::string_view s) : s_(s) {}

  double run() {
    double v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    if (!std::isfinite(v)) fail("angle is not finite");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("bad angle '" + std::string(s_) + "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  double expr() {
    double v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }
  double term() {
    double v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        double d = unary();
        if (d == 0.0) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }
  double unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return primary();
  }
  double primary() {
    skip();
    if (eat('(')) {
      double v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (s_.size() - pos_ >= 2 && lower(s_.substr(pos_, 2)) == "pi") {
      pos_ += 2;
      return std::numbers::pi;
    }
    const char* begin = s_.data() + pos_;
    const char* end = s_.data() + s_.size();
    double v = 0;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr == begin) fail("expected a number or pi");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string fmt_angle(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string_view gate_name(GateKind k) { return info(k).name; }

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  std::string n = lower(name);
  for (const auto& i : kKinds) {
    if (i.name == n) return i.kind;
  }
  return std::nullopt;
}

std::size_t gate_arity(GateKind k) { return info(k).arity; }
std::size_t gate_angle_count(GateKind k) { return info(k).angles; }

Gate make_gate(GateKind k, std::vector<std::size_t> qubits, std::vector<double> angles) {
  if (qubits.size() != gate_arity(k)) throw std::invalid_argument(std::string(gate_name(k)) + ": wrong operand count");
  if (angles.size() != gate_angle_count(k)) throw std::invalid_argument(std::string(gate_name(k)) + ": wrong angle count");
  if (qubits.size() == 2 && qubits[0] == qubits[1]) throw std::invalid_argument(std::string(gate_name(k)) + ": repeated operand");
  for (double a : angles) {
    if (!std::isfinite(a)) throw std::invalid_argument(std::string(gate_name(k)) + ": angle is not finite");
  }
  Gate g;
  g.kind = k;
  g.qubits = std::move(qubits);
  g.angles = std::move(angles);
  return g;
}

Gate make_measz(std::size_t q, Cvar c) {
  Gate g = make_gate(GateKind::MeasZ, {q});
  g.cvar = c;
  return g;
}

Gate make_tqe(Letter s1, Letter s2, std::size_t i, std::size_t j) {
  if (s1 == Letter::I || s2 == Letter::I) throw std::invalid_argument("tqe: bases must be X, Y or Z");
  Gate g = make_gate(GateKind::TQE, {i, j});
  g.sigma1 = s1;
  g.sigma2 = s2;
  return g;
}

double parse_angle(std::string_view text) { return AngleParser(text).run(); }

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  bool have_qubits = false;
  bool have_cbits = false;
  bool seen_gate = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> CircuitParseError { return CircuitParseError(line_no, pos + 1, why); };
    auto skip = [&] {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    };
    auto read_word = [&] {
      skip();
      std::size_t b = pos;
      while (pos < line.size() && (std::isalnum(static_cast<unsigned char>(line[pos])) || line[pos] == '_')) ++pos;
      return line.substr(b, pos - b);
    };
    auto read_index = [&](char prefix, std::size_t limit, const char* what) -> std::size_t {
      skip();
      if (pos >= line.size() || std::tolower(static_cast<unsigned char>(line[pos])) != prefix) {
        throw fail(std::string("expected ") + what);
      }
      ++pos;
      std::size_t b = pos;
      while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(line.data() + b, line.data() + pos, v);
      if (b == pos || ec != std::errc()) {
        pos = b;
        throw fail(std::string("expected ") + what + " index");
      }
      if (v >= limit) {
        pos = b;
        throw fail(std::string(what) + " " + std::to_string(v) + " is not declared");
      }
      return v;
    };

    skip();
    if (pos == line.size()) continue;
    std::size_t word_col = pos;
    std::string word = lower(read_word());
    if (word.empty()) throw fail("expected a statement");

    if (word == "qubits" || word == "cbits") {
      if (seen_gate) throw CircuitParseError(line_no, word_col + 1, word + " must precede gates");
      skip();
      std::size_t b = pos;
      while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(line.data() + b, line.data() + pos, v);
      if (b == pos || ec != std::errc()) {
        pos = b;
        throw fail("expected a count");
      }
      if (word == "qubits") {
        if (have_qubits) throw CircuitParseError(line_no, word_col + 1, "qubits declared twice");
        if (v > kMaxQubits) throw fail("qubit count exceeds cap " + std::to_string(kMaxQubits));
        c.n_qubits = v;
        have_qubits = true;
      } else {
        if (have_cbits) throw CircuitParseError(line_no, word_col + 1, "cbits declared twice");
        c.n_cvars = v;
        have_cbits = true;
      }
      skip();
      if (pos != line.size()) throw fail("trailing characters");
      continue;
    }

    if (!have_qubits) throw CircuitParseError(line_no, word_col + 1, "qubits must be declared before gates");
    seen_gate = true;
    std::optional<GateKind> kind = gate_kind_from_name(word);
    if (!kind) throw CircuitParseError(line_no, word_col + 1, "unknown gate '" + word + "'");

    Gate g;
    g.kind = *kind;
    skip();
    std::vector<std::string> args;
    if (pos < line.size() && line[pos] == '(') {
      std::size_t close = pos;
      int depth = 0;
      for (; close < line.size(); ++close) {
        if (line[close] == '(') ++depth;
        if (line[close] == ')' && --depth == 0) break;
      }
      if (close == line.size()) throw fail("missing ')'");
      std::string_view inside = line.substr(pos + 1, close - pos - 1);
      std::size_t a = 0;
      depth = 0;
      for (std::size_t k = 0; k <= inside.size(); ++k) {
        if (k < inside.size() && inside[k] == '(') ++depth;
        if (k < inside.size() && inside[k] == ')') --depth;
        if (k == inside.size() || (inside[k] == ',' && depth == 0)) {
          args.emplace_back(inside.substr(a, k - a));
          a = k + 1;
        }
      }
      pos = close + 1;
    }

    if (g.kind == GateKind::TQE) {
      if (args.size() != 2) throw fail("tqe needs two bases, e.g. tqe(z,x)");
      for (int k = 0; k < 2; ++k) {
        std::string b = lower(args[k]);
        b.erase(std::remove_if(b.begin(), b.end(), [](unsigned char ch) { return std::isspace(ch); }), b.end());
        if (b != "x" && b != "y" && b != "z") throw fail("tqe basis must be x, y or z");
        (k == 0 ? g.sigma1 : g.sigma2) = letter_from_char(b[0]);
      }
    } else {
      if (args.size() != gate_angle_count(g.kind)) {
        throw fail(std::string(gate_name(g.kind)) + " takes " + std::to_string(gate_angle_count(g.kind)) + " angle(s)");
      }
      for (const std::string& a : args) {
        try {
          g.angles.push_back(parse_angle(a));
        } catch (const std::invalid_argument& e) {
          throw fail(e.what());
        }
      }
    }

    for (std::size_t k = 0; k < gate_arity(g.kind); ++k) {
      g.qubits.push_back(read_index('q', c.n_qubits, "qubit"));
    }
    if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1]) throw fail("repeated operand");
    if (g.kind == GateKind::MeasZ) {
      skip();
      if (line.substr(pos, 2) != "->") throw fail("expected '->'");
      pos += 2;
      g.cvar = static_cast<Cvar>(read_index('c', c.n_cvars, "cbit"));
    }
    skip();
    if (pos != line.size()) throw fail("trailing characters");
    c.gates.push_back(std::move(g));
  }
  return c;
}

std::string emit_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.n_qubits << "\n";
  out << "cbits " << c.n_cvars << "\n";
  for (const Gate& g : c.gates) {
    out << gate_name(g.kind);
    if (g.kind == GateKind::TQE) {
      out << "(" << static_cast<char>(std::tolower(letter_char(g.sigma1))) << ","
          << static_cast<char>(std::tolower(letter_char(g.sigma2))) << ")";
    } else if (!g.angles.empty()) {
      out << "(";
      for (std::size_t k = 0; k < g.angles.size(); ++k) {
        if (k) out << ",";
        out << fmt_angle(g.angles[k]);
      }
      out << ")";
    }
    for (std::size_t q : g.qubits) out << " q" << q;
    if (g.kind == GateKind::MeasZ) out << " -> c" << g.cvar;
    out << "\n";
  }
  return out.str();
}

Metrics metrics(const Circuit& c) {
  Metrics m;
  std::vector<std::size_t> frontier(c.n_qubits, 0);
  for (const Gate& g : c.gates) {
    ++m.total_gates;
    if (g.qubits.size() == 2) ++m.two_qubit_gates;
    if (g.kind == GateKind::MeasZ) ++m.measurements;
    if (g.kind == GateKind::PrepZ || g.kind == GateKind::PrepX) ++m.preparations;
    std::size_t t = 0;
    for (std::size_t q : g.qubits) t = std::max(t, frontier[q]);
    ++t;
    for (std::size_t q : g.qubits) frontier[q] = t;
    m.depth = std::max(m.depth, t);
  }
  return m;
}

std::optional<PauliFrame> gate_frame(const Gate& g, std::size_t n) {
  CliffordGate cg;
  cg.qubits = g.qubits;
  switch (g.kind) {
    case GateKind::H:
      cg.kind = CliffordKind::H;
      break;
    case GateKind::S:
      cg.kind = CliffordKind::S;
      break;
    case GateKind::Sdg:
      cg.kind = CliffordKind::Sdg;
      break;
    case GateKind::X:
      cg.kind = CliffordKind::X;
      break;
    case GateKind::Y:
      cg.kind = CliffordKind::Y;
      break;
    case GateKind::Z:
      cg.kind = CliffordKind::Z;
      break;
    case GateKind::CNOT:
      cg.kind = CliffordKind::CNOT;
      break;
    case GateKind::CZ:
      cg.kind = CliffordKind::CZ;
      break;
    case GateKind::SWAP:
      cg.kind = CliffordKind::SWAP;
      break;
    case GateKind::TQE:
      cg.kind = CliffordKind::TQE;
      cg.sigma1 = g.sigma1;
      cg.sigma2 = g.sigma2;
      break;
    default:
      return std::nullopt;
  }
  return from_gate(cg, n);
}

std::vector<Node> lower_gate(const Gate& g, std::size_t n) {
  for (std::size_t q : g.qubits) {
    if (q >= n) throw WidthError("gate operand q" + std::to_string(q) + " out of range");
  }
  auto single = [&](Letter l) { return Pauli::single(n, g.qubits[0], l); };
  switch (g.kind) {
    case GateKind::PrepZ:
      return {Node::preparation(single(Letter::Z), single(Letter::X))};
    case GateKind::PrepX:
      return {Node::preparation(single(Letter::X), single(Letter::Z))};
    case GateKind::MeasZ:
      return {Node::measurement(single(Letter::Z), g.cvar)};
    case GateKind::T:
      return {Node::rotation(single(Letter::Z), std::numbers::pi / 4)};
    case GateKind::Tdg:
      return {Node::rotation(single(Letter::Z), -std::numbers::pi / 4)};
    case GateKind::RX:
      return {Node::rotation(single(Letter::X), g.angles.at(0))};
    case GateKind::RY:
      return {Node::rotation(single(Letter::Y), g.angles.at(0))};
    case GateKind::RZ:
      return {Node::rotation(single(Letter::Z), g.angles.at(0))};
    case GateKind::RXY: {
      double theta = g.angles.at(0), phi = g.angles.at(1);
      return {Node::rotation(single(Letter::Z), -phi), Node::rotation(single(Letter::X), theta),
              Node::rotation(single(Letter::Z), phi)};
    }
    default:
      break;
  }
  std::optional<PauliFrame> f = gate_frame(g, n);
  if (!f) throw std::invalid_argument("cannot lower gate " + std::string(gate_name(g.kind)));
  return {Node::frame(std::move(*f))};
}

}  // namespace pcoast
