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

#ifndef PCOAST_PAULI_HPP
#define PCOAST_PAULI_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#ifndef PCOAST_MAX_QUBITS
#define PCOAST_MAX_QUBITS 1024
#endif

namespace pcoast {

inline constexpr std::size_t kMaxQubits = PCOAST_MAX_QUBITS;

/// Raised when operands of different widths meet, or a width exceeds the cap.
class WidthError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for malformed Pauli text.
class PauliParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Single-qubit letter. The numeric value is (x | z << 1).
enum class Letter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char letter_char(Letter l);
Letter letter_from_char(char c);
/// 1 iff the two letters anticommute.
inline int letter_lambda(Letter a, Letter b) {
  auto ua = static_cast<unsigned>(a), ub = static_cast<unsigned>(b);
  return static_cast<int>(((ua & 1u) & (ub >> 1)) ^ ((ua >> 1) & (ub & 1u)));
}

/// An n-qubit Pauli string i^k * (p_0 (x) p_1 (x) ...).
///
/// Storage is symplectic: qubit j holds X iff (x,z)=(1,0), Z iff (0,1),
/// Y iff (1,1). The phase exponent k multiplies the *letter* form, so the
/// operator Y stays Y and `-X0` has k=2. Converting to a matrix therefore
/// uses Y = i*X*Z per Y factor, i.e. i^(k + #Y) X^x Z^z.
class Pauli {
 public:
  Pauli() = default;
  explicit Pauli(std::size_t n_qubits);

  /// Weight-one Pauli with the given letter on qubit q.
  static Pauli single(std::size_t n_qubits, std::size_t q, Letter l);

  /// Parses text such as "-X0Z2", "iY1", "+I". Width must cover every index.
  static Pauli parse(std::string_view text, std::size_t n_qubits);
  /// Same, with the width inferred as one past the largest index.
  static Pauli parse(std::string_view text);

  std::size_t n_qubits() const { return n_; }

  bool x(std::size_t q) const { return (x_[q >> 6] >> (q & 63)) & 1u; }
  bool z(std::size_t q) const { return (z_[q >> 6] >> (q & 63)) & 1u; }
  Letter letter(std::size_t q) const {
    return static_cast<Letter>(static_cast<unsigned>(x(q)) | (static_cast<unsigned>(z(q)) << 1));
  }
  void set_letter(std::size_t q, Letter l);

  std::uint8_t phase_exp() const { return phase_; }
  void set_phase_exp(int k) { phase_ = static_cast<std::uint8_t>(((k % 4) + 4) % 4); }

  /// For Hermitian Paulis: 0 for +, 1 for -.
  int sign_bit() const { return phase_ >> 1; }

  bool is_hermitian() const { return (phase_ & 1u) == 0; }
  bool is_identity() const;  // letters only, phase ignored
  std::size_t weight() const;
  std::vector<std::size_t> support() const;

  Pauli negated() const;
  /// Same letters with phase +1.
  Pauli unsigned_letters() const;

  /// Multiplies letter l onto qubit q from the right, phase-exact.
  void mul_letter_right(std::size_t q, Letter l);

  bool same_letters(const Pauli& other) const;
  bool operator==(const Pauli& other) const;
  bool operator!=(const Pauli& other) const { return !(*this == other); }
  bool operator<(const Pauli& other) const;

  std::string str() const;

  const std::vector<std::uint64_t>& x_words() const { return x_; }
  const std::vector<std::uint64_t>& z_words() const { return z_; }
  std::size_t hash() const;

  friend Pauli mul(const Pauli& a, const Pauli& b);
  friend int commutator_lambda(const Pauli& a, const Pauli& b);

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
  std::uint8_t phase_ = 0;
};

/// Group product with exact phase.
Pauli mul(const Pauli& a, const Pauli& b);

/// 0 if a and b commute, 1 if they anticommute.
int commutator_lambda(const Pauli& a, const Pauli& b);

inline bool commute(const Pauli& a, const Pauli& b) { return commutator_lambda(a, b) == 0; }

/// a (.) b = (-i)^lambda a*b. Both operands must be Hermitian.
Pauli hermitian_product(const Pauli& a, const Pauli& b);

void require_same_width(std::size_t a, std::size_t b, const char* what);

}  // namespace pcoast

template <>
struct std::hash<pcoast::Pauli> {
  std::size_t operator()(const pcoast::Pauli& p) const { return p.hash(); }
};

#endif  // PCOAST_PAULI_HPP
