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

#include "pcoast/pauli.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>

namespace pcoast {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

int popcount_and(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  int total = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    total += std::popcount(a[k] & b[k]);
  }
  return total;
}

// Phase of the product of two single-qubit letters, as a power of i.
// Row = left operand, column = right operand, indexed by Letter value.
constexpr int kLetterProductPhase[4][4] = {
    // I  X  Z  Y
    {0, 0, 0, 0},  // I
    {0, 0, 3, 1},  // X: XZ = -iY, XY = iZ
    {0, 1, 0, 3},  // Z: ZX = iY, ZY = -iX
    {0, 3, 1, 0},  // Y: YX = -iZ, YZ = iX
};

}  // namespace

char letter_char(Letter l) {
  switch (l) {
    case Letter::I:
      return 'I';
    case Letter::X:
      return 'X';
    case Letter::Y:
      return 'Y';
    case Letter::Z:
      return 'Z';
  }
  return '?';
}

Letter letter_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'I':
      return Letter::I;
    case 'X':
      return Letter::X;
    case 'Y':
      return Letter::Y;
    case 'Z':
      return Letter::Z;
    default:
      throw PauliParseError(std::string("not a Pauli letter: '") + c + "'");
  }
}

void require_same_width(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream msg;
    msg << what << ": width mismatch (" << a << " vs " << b << ")";
    throw WidthError(msg.str());
  }
}

Pauli::Pauli(std::size_t n_qubits) : n_(n_qubits), x_(words_for(n_qubits), 0), z_(words_for(n_qubits), 0) {
  if (n_qubits > kMaxQubits) {
    throw WidthError("width " + std::to_string(n_qubits) + " exceeds cap " + std::to_string(kMaxQubits));
  }
}

Pauli Pauli::single(std::size_t n_qubits, std::size_t q, Letter l) {
  if (q >= n_qubits) {
    throw WidthError("qubit " + std::to_string(q) + " out of range for width " + std::to_string(n_qubits));
  }
  Pauli p(n_qubits);
  p.set_letter(q, l);
  return p;
}

void Pauli::set_letter(std::size_t q, Letter l) {
  auto v = static_cast<unsigned>(l);
  std::uint64_t bit = std::uint64_t{1} << (q & 63);
  if (v & 1u) {
    x_[q >> 6] |= bit;
  } else {
    x_[q >> 6] &= ~bit;
  }
  if (v & 2u) {
    z_[q >> 6] |= bit;
  } else {
    z_[q >> 6] &= ~bit;
  }
}

bool Pauli::is_identity() const {
  for (std::size_t k = 0; k < x_.size(); ++k) {
    if (x_[k] | z_[k]) {
      return false;
    }
  }
  return true;
}

std::size_t Pauli::weight() const {
  std::size_t w = 0;
  for (std::size_t k = 0; k < x_.size(); ++k) {
    w += static_cast<std::size_t>(std::popcount(x_[k] | z_[k]));
  }
  return w;
}

std::vector<std::size_t> Pauli::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < x_.size(); ++k) {
    std::uint64_t w = x_[k] | z_[k];
    while (w) {
      out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

Pauli Pauli::negated() const {
  Pauli r = *this;
  r.phase_ = static_cast<std::uint8_t>((phase_ + 2) & 3u);
  return r;
}

Pauli Pauli::unsigned_letters() const {
  Pauli r = *this;
  r.phase_ = 0;
  return r;
}

void Pauli::mul_letter_right(std::size_t q, Letter l) {
  Letter cur = letter(q);
  int ph = kLetterProductPhase[static_cast<int>(cur)][static_cast<int>(l)];
  set_letter(q, static_cast<Letter>(static_cast<unsigned>(cur) ^ static_cast<unsigned>(l)));
  phase_ = static_cast<std::uint8_t>((phase_ + ph) & 3u);
}

bool Pauli::same_letters(const Pauli& other) const { return n_ == other.n_ && x_ == other.x_ && z_ == other.z_; }

bool Pauli::operator==(const Pauli& other) const { return phase_ == other.phase_ && same_letters(other); }

bool Pauli::operator<(const Pauli& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  if (x_ != other.x_) return x_ < other.x_;
  if (z_ != other.z_) return z_ < other.z_;
  return phase_ < other.phase_;
}

std::string Pauli::str() const {
  std::string out;
  switch (phase_) {
    case 1:
      out = "i";
      break;
    case 2:
      out = "-";
      break;
    case 3:
      out = "-i";
      break;
    default:
      break;
  }
  bool any = false;
  for (std::size_t q : support()) {
    out += letter_char(letter(q));
    out += std::to_string(q);
    any = true;
  }
  if (!any) out += 'I';
  return out;
}

std::size_t Pauli::hash() const {
  std::size_t h = std::hash<std::size_t>{}(n_) ^ (static_cast<std::size_t>(phase_) << 7);
  for (std::size_t k = 0; k < x_.size(); ++k) {
    h = h * 1000003u ^ std::hash<std::uint64_t>{}(x_[k]);
    h = h * 1000003u ^ std::hash<std::uint64_t>{}(z_[k] * 0x9E3779B97F4A7C15ull);
  }
  return h;
}

namespace {

struct ParsedTerm {
  int phase = 0;
  std::vector<std::pair<std::size_t, Letter>> letters;
  std::size_t max_index = 0;
};

ParsedTerm parse_terms(std::string_view text) {
  ParsedTerm out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') out.phase += 2;
    ++pos;
  }
  skip_ws();
  if (pos < text.size() && text[pos] == 'i') {
    out.phase += 1;
    ++pos;
  }
  skip_ws();
  if (pos >= text.size()) throw PauliParseError("empty Pauli string");
  if ((text[pos] == 'I' || text[pos] == 'i') &&
      (pos + 1 == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos + 1])))) {
    ++pos;
    skip_ws();
    if (pos != text.size()) throw PauliParseError("trailing characters after identity in '" + std::string(text) + "'");
    return out;
  }
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    Letter l = letter_from_char(text[pos]);
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw PauliParseError("missing qubit index in '" + std::string(text) + "'");
    std::size_t idx = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, idx);
    if (ec != std::errc()) throw PauliParseError("bad qubit index in '" + std::string(text) + "'");
    for (const auto& [q, _] : out.letters) {
      if (q == idx) throw PauliParseError("qubit " + std::to_string(idx) + " repeated in '" + std::string(text) + "'");
    }
    if (l != Letter::I) out.letters.emplace_back(idx, l);
    out.max_index = std::max(out.max_index, idx + 1);
  }
  return out;
}

}  // namespace

Pauli Pauli::parse(std::string_view text, std::size_t n_qubits) {
  ParsedTerm t = parse_terms(text);
  if (t.max_index > n_qubits) {
    throw WidthError("Pauli '" + std::string(text) + "' does not fit width " + std::to_string(n_qubits));
  }
  Pauli p(n_qubits);
  for (const auto& [q, l] : t.letters) p.set_letter(q, l);
  p.set_phase_exp(t.phase);
  return p;
}

Pauli Pauli::parse(std::string_view text) {
  ParsedTerm t = parse_terms(text);
  return parse(text, t.max_index);
}

Pauli mul(const Pauli& a, const Pauli& b) {
  require_same_width(a.n_, b.n_, "mul");
  Pauli r(a.n_);
  for (std::size_t k = 0; k < a.x_.size(); ++k) {
    r.x_[k] = a.x_[k] ^ b.x_[k];
    r.z_[k] = a.z_[k] ^ b.z_[k];
  }
  // Letter form -> X^x Z^z form (one i per Y), multiply, move Z^z1 past
  // X^x2 (a sign per overlap), then back to letter form.
  int k = a.phase_ + b.phase_ + popcount_and(a.x_, a.z_) + popcount_and(b.x_, b.z_) +
          2 * popcount_and(a.z_, b.x_) - popcount_and(r.x_, r.z_);
  r.phase_ = static_cast<std::uint8_t>(((k % 4) + 4) % 4);
  return r;
}

int commutator_lambda(const Pauli& a, const Pauli& b) {
  require_same_width(a.n_, b.n_, "commutator_lambda");
  int total = 0;
  for (std::size_t k = 0; k < a.x_.size(); ++k) {
    total += std::popcount((a.x_[k] & b.z_[k]) ^ (a.z_[k] & b.x_[k]));
  }
  return total & 1;
}

Pauli hermitian_product(const Pauli& a, const Pauli& b) {
  if (!a.is_hermitian() || !b.is_hermitian()) {
    throw std::invalid_argument("hermitian_product: non-Hermitian operand");
  }
  Pauli r = mul(a, b);
  if (commutator_lambda(a, b)) {
    r.set_phase_exp(r.phase_exp() + 3);
  }
  return r;
}

}  // namespace pcoast
