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

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "pcoast/pauli.hpp"

namespace {

using pcoast::Letter;
using pcoast::Pauli;

Pauli P(const char* text, std::size_t n = 3) { return Pauli::parse(text, n); }

TEST(Pauli, ParseAndRender) {
  EXPECT_EQ(P("-X0Z2").str(), "-X0Z2");
  EXPECT_EQ(P("iY1").str(), "iY1");
  EXPECT_EQ(P("+I").str(), "I");
  EXPECT_EQ(Pauli::parse("X0Z2").n_qubits(), 3u);
  EXPECT_THROW(Pauli::parse("X3", 2), pcoast::WidthError);
  EXPECT_THROW(Pauli::parse("Q0", 2), pcoast::PauliParseError);
  EXPECT_THROW(Pauli::parse("X0X0", 2), pcoast::PauliParseError);
}

TEST(Pauli, ProductExamples) {
  // XY = iZ
  EXPECT_EQ(mul(P("X0"), P("Y0")), P("iZ0"));
  EXPECT_EQ(mul(P("X0Z1"), Pauli(3)), P("X0Z1"));
  EXPECT_EQ(mul(P("X0Z1"), P("X0Z1")), Pauli(3));
  EXPECT_EQ(mul(P("Z0"), P("X0")), P("iY0"));
}

TEST(Pauli, CommutatorExamples) {
  EXPECT_EQ(commutator_lambda(P("X0"), P("Z0")), 1);
  EXPECT_EQ(commutator_lambda(P("X0Z1"), P("Z0X1")), 0);
  EXPECT_EQ(commutator_lambda(P("X0Y1Z2"), Pauli(3)), 0);
}

TEST(Pauli, HermitianProductExamples) {
  EXPECT_EQ(hermitian_product(P("X0"), P("Y0")), P("Z0"));
  EXPECT_EQ(hermitian_product(P("Z0"), P("Z1")), P("Z0Z1"));
  EXPECT_EQ(hermitian_product(P("-X0"), P("Y0")), P("-Z0"));
}

TEST(Pauli, SupportWeightHermiticity) {
  EXPECT_EQ(P("X0Z2").support(), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(P("X0Z2").weight(), 2u);
  EXPECT_EQ(Pauli(4).weight(), 0u);
  EXPECT_FALSE(P("iX0").is_hermitian());
  EXPECT_TRUE(P("-X0").is_hermitian());
  EXPECT_EQ(P("X0").negated(), P("-X0"));
}

TEST(Pauli, LetterLambdaTable) {
  const Letter ls[] = {Letter::I, Letter::X, Letter::Z, Letter::Y};
  for (Letter a : ls)
    for (Letter b : ls) {
      oracle::Mat A = oracle::letter_matrix(a), B = oracle::letter_matrix(b);
      int expect = oracle::close(A * B, B * A) ? 0 : 1;
      EXPECT_EQ(pcoast::letter_lambda(a, b), expect);
    }
}

TEST(Pauli, WidthMismatchThrows) {
  EXPECT_THROW(mul(Pauli(2), Pauli(3)), pcoast::WidthError);
  EXPECT_THROW(commutator_lambda(Pauli(2), Pauli(3)), pcoast::WidthError);
}

TEST(Pauli, ProductMatchesDenseOracle) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 1 + t % 4;
    Pauli a = oracle::random_pauli(n, rng), b = oracle::random_pauli(n, rng);
    a.set_phase_exp(t % 4);
    EXPECT_TRUE(oracle::close(oracle::dense(mul(a, b)), oracle::dense(a) * oracle::dense(b)))
        << a.str() << " * " << b.str();
  }
}

TEST(Pauli, CommutatorMatchesDenseOracle) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 1 + t % 4;
    Pauli a = oracle::random_pauli(n, rng), b = oracle::random_pauli(n, rng);
    oracle::Mat A = oracle::dense(a), B = oracle::dense(b);
    EXPECT_EQ(commutator_lambda(a, b), oracle::close(A * B, B * A) ? 0 : 1);
  }
}

TEST(Pauli, HermitianProductIsHermitian) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    Pauli a = oracle::random_pauli(3, rng), b = oracle::random_pauli(3, rng);
    oracle::Mat m = oracle::dense(hermitian_product(a, b));
    EXPECT_TRUE(oracle::close(m, m.adjoint()));
  }
}

// Words are 64 bits wide; exercise qubits on both sides of the boundary.
TEST(Pauli, WideStringsCrossWordBoundary) {
  Pauli a(130), b(130);
  a.set_letter(63, Letter::X);
  a.set_letter(64, Letter::Z);
  a.set_letter(129, Letter::Y);
  b.set_letter(63, Letter::Z);
  b.set_letter(64, Letter::Z);
  b.set_letter(129, Letter::X);
  EXPECT_EQ(a.weight(), 3u);
  EXPECT_EQ(commutator_lambda(a, b), 0);  // two anticommuting positions
  Pauli c = mul(a, b);
  EXPECT_EQ(c.letter(63), Letter::Y);
  EXPECT_EQ(c.letter(64), Letter::I);
  EXPECT_EQ(c.letter(129), Letter::Z);
  EXPECT_EQ(Pauli::parse(a.str(), 130), a);
}

TEST(Pauli, TextRoundTrip) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 200; ++t) {
    Pauli a = oracle::random_pauli(5, rng);
    a.set_phase_exp(t % 4);
    EXPECT_EQ(Pauli::parse(a.str(), 5), a);
  }
}

}  // namespace
