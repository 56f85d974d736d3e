// Copyright 2025 The cliffchar authors
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

#include "cliffchar/pauli.hpp"

#include <random>

#include "cliffchar/exact_matrix.hpp"
#include "cliffchar/flat_map.hpp"
#include "gtest/gtest.h"

namespace cliffchar {
namespace {

BitVec pq(std::size_t n, std::uint64_t p_bits, std::uint64_t q_bits) {
  return BitVec(2 * n, p_bits | (q_bits << n));
}

const BitVec kX1 = pq(1, 0, 1);
const BitVec kZ1 = pq(1, 1, 0);
const BitVec kY1 = pq(1, 1, 1);

TEST(WeylMul, ZTimesXIsPlusIY) {
  PauliElement z(0, kZ1), x(0, kX1);
  PauliElement zx = weyl_mul(z, x);
  EXPECT_EQ(zx.phase, 1);
  EXPECT_EQ(zx.index, kY1);
}

TEST(WeylMul, XTimesZIsMinusIY) {
  PauliElement zx = weyl_mul(PauliElement(0, kX1), PauliElement(0, kZ1));
  EXPECT_EQ(zx.phase, 3);
  EXPECT_EQ(zx.index, kY1);
}

TEST(WeylMul, WeylOperatorsAreInvolutions) {
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    PauliElement w(0, BitVec(4, bits));
    PauliElement square = weyl_mul(w, w);
    EXPECT_EQ(square.phase, 0);
    EXPECT_TRUE(square.index.is_zero());
  }
}

TEST(WeylMul, CommutatorPhaseIsSymplecticForm) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    PauliElement a(std::uint8_t(rng() & 3), BitVec(4, rng()));
    PauliElement b(std::uint8_t(rng() & 3), BitVec(4, rng()));
    PauliElement ab = weyl_mul(a, b), ba = weyl_mul(b, a);
    EXPECT_EQ(ab.index, ba.index);
    int delta = ((int(ab.phase) - int(ba.phase)) % 4 + 4) % 4;
    EXPECT_EQ(delta, 2 * symp_form_z2(a.index, b.index));
  }
}

TEST(WeylMul, AssociativeAndUnitalOneQubitExhaustive) {
  std::vector<PauliElement> all;
  for (int k = 0; k < 4; ++k) {
    for (std::uint64_t bits = 0; bits < 4; ++bits) {
      all.emplace_back(std::uint8_t(k), BitVec(2, bits));
    }
  }
  PauliElement e = PauliElement::identity(1);
  for (const auto& a : all) {
    EXPECT_EQ(weyl_mul(e, a), a);
    EXPECT_EQ(weyl_mul(a, e), a);
    for (const auto& b : all) {
      for (const auto& c : all) {
        EXPECT_EQ(weyl_mul(weyl_mul(a, b), c), weyl_mul(a, weyl_mul(b, c)));
      }
    }
  }
}

TEST(WeylMul, AssociativeOnRandomTwoQubitTriples) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    PauliElement a(std::uint8_t(rng() & 3), BitVec(4, rng()));
    PauliElement b(std::uint8_t(rng() & 3), BitVec(4, rng()));
    PauliElement c(std::uint8_t(rng() & 3), BitVec(4, rng()));
    EXPECT_EQ(weyl_mul(weyl_mul(a, b), c), weyl_mul(a, weyl_mul(b, c)));
  }
}

TEST(WeylMul, GroupOrderIsFourToNPlusOne) {
  // Closure of {iI, W_{e_j}} under weyl_mul.
  for (std::size_t n = 1; n <= 2; ++n) {
    std::vector<PauliElement> gens{PauliElement(1, BitVec::zeros(2 * n))};
    for (std::size_t j = 0; j < 2 * n; ++j) {
      gens.push_back(PauliElement::basis(n, j));
    }
    auto key = [n](const PauliElement& p) {
      return std::uint64_t(p.phase) << (2 * n) | p.index.bits();
    };
    FlatMap64 seen;
    std::vector<PauliElement> frontier{PauliElement::identity(n)};
    seen.insert(key(frontier[0]), 0);
    std::size_t count = 1;
    while (!frontier.empty()) {
      std::vector<PauliElement> next;
      for (const auto& p : frontier) {
        for (const auto& g : gens) {
          PauliElement q = weyl_mul(p, g);
          if (seen.insert(key(q), 0)) {
            next.push_back(q);
            ++count;
          }
        }
      }
      frontier = std::move(next);
    }
    EXPECT_EQ(count, std::size_t{1} << (2 * n + 2));
  }
}

TEST(MatrixOracle, ZAndYMatchPrintedMatrices) {
  ExactMatrix z = matrix_oracle(PauliElement(0, kZ1));
  EXPECT_EQ(z, pauli_z_matrix());

  ExactMatrix y = matrix_oracle(PauliElement(0, kY1));
  ExactMatrix expected(2);
  expected.at(0, 1) = ExactScalar::i_power(3);  // -i
  expected.at(1, 0) = ExactScalar::i_power(1);  // i
  EXPECT_EQ(y, expected);
}

TEST(MatrixOracle, MultiplicationHomomorphismOnRandomPairs) {
  std::mt19937_64 rng(41);
  for (std::size_t n = 1; n <= 2; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      PauliElement a(std::uint8_t(rng() & 3), BitVec(2 * n, rng()));
      PauliElement b(std::uint8_t(rng() & 3), BitVec(2 * n, rng()));
      EXPECT_EQ(matrix_oracle(weyl_mul(a, b)),
                matrix_oracle(a) * matrix_oracle(b));
    }
  }
}

TEST(CharValue, TrivialAndSigma1) {
  PauliCharacter trivial = PauliCharacter::trivial(1);
  for (std::uint64_t bits = 0; bits < 4; ++bits) {
    EXPECT_EQ(char_value(trivial, BitVec(2, bits)), 1);
  }
  PauliCharacter sigma1 = PauliCharacter::sigma1(1);
  EXPECT_EQ(char_value(sigma1, kX1), -1);
  EXPECT_EQ(char_value(sigma1, kZ1), -1);
  EXPECT_EQ(char_value(sigma1, kY1), 1);
}

TEST(CharValue, LabelsMultiplyAdditively) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    BitVec a(4, rng()), b(4, rng()), x(4, rng());
    int lhs = char_value(PauliCharacter{a ^ b}, x);
    int rhs = char_value(PauliCharacter{a}, x) * char_value(PauliCharacter{b}, x);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(PauliTable, OneQubitMatchesPrintedTable) {
  PauliCharacterTable t = pauli_char_table(1);
  // Rows psi_1..psi_4, columns [1], [X], [Z], [Y].
  std::vector<std::vector<int>> expected = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
  EXPECT_EQ(t.values, expected);
}

TEST(PauliTable, RowsOrthogonalAndBalanced) {
  PauliCharacterTable t = pauli_char_table(2);
  ASSERT_EQ(t.values.size(), 16u);
  for (std::size_t r = 1; r < 16; ++r) {
    int sum = 0, plus = 0;
    for (int v : t.values[r]) {
      sum += v;
      plus += v == 1;
    }
    EXPECT_EQ(sum, 0);
    EXPECT_EQ(plus, 8);
  }
  for (std::size_t r = 0; r < 16; ++r) {
    for (std::size_t s = 0; s < 16; ++s) {
      int dot = 0;
      for (std::size_t c = 0; c < 16; ++c) dot += t.values[r][c] * t.values[s][c];
      EXPECT_EQ(dot, r == s ? 16 : 0);
    }
  }
}

TEST(PauliTable, FirstRowAndColumnAllOnes) {
  PauliCharacterTable t = pauli_char_table(2);
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    EXPECT_EQ(t.values[0][i], 1);
    EXPECT_EQ(t.values[i][0], 1);
  }
}

TEST(PauliTable, SizeCapThrows) {
  EXPECT_THROW(pauli_char_table(9), std::invalid_argument);
}

}  // namespace
}  // namespace cliffchar
