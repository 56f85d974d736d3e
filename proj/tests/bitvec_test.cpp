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

#include "cliffchar/bitvec.hpp"

#include <random>

#include "gtest/gtest.h"

namespace cliffchar {
namespace {

BitVec pq(std::size_t n, std::uint64_t p_bits, std::uint64_t q_bits) {
  return BitVec(2 * n, p_bits | (q_bits << n));
}

TEST(SympFormZ2, PaperOneQubitValue) {
  // [(1|0), (0|1)] = p.q' - q.p' = 1
  EXPECT_EQ(symp_form_z2(pq(1, 1, 0), pq(1, 0, 1)), 1);
}

TEST(SympFormZ2, SelfPairingVanishes) {
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    BitVec x(4, bits);
    EXPECT_EQ(symp_form_z2(x, x), 0);
  }
}

TEST(SympFormZ2, TwoQubitDirectEvaluation) {
  // [(10|00), (00|01)]: p.q' = (1,0).(0,1) = 0, q.p' = 0
  EXPECT_EQ(symp_form_z2(pq(2, 0b01, 0b00), pq(2, 0b00, 0b10)), 0);
}

TEST(SympFormZ2, Bilinearity) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    BitVec x(6, rng()), y(6, rng()), z(6, rng());
    EXPECT_EQ(symp_form_z2(x ^ y, z),
              (symp_form_z2(x, z) + symp_form_z2(y, z)) % 2);
  }
}

TEST(SympFormZ2, NondegenerateUpToThreeQubits) {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t dim = 2 * n;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << dim); ++bits) {
      BitVec x(dim, bits);
      bool hit = false;
      for (std::size_t j = 0; j < dim && !hit; ++j) {
        hit = symp_form_z2(x, BitVec::unit(dim, j)) == 1;
      }
      EXPECT_TRUE(hit) << "degenerate at " << x.to_string();
    }
  }
}

TEST(SympFormZ2, LengthMismatchThrows) {
  EXPECT_THROW(symp_form_z2(BitVec(2, 1), BitVec(4, 1)), std::invalid_argument);
}

TEST(SympFormZ4, OneQubitValues) {
  auto v = [](std::uint8_t p, std::uint8_t q) {
    return Z4Vec(std::vector<std::uint8_t>{p, q});
  };
  EXPECT_EQ(symp_form_z4(v(1, 0), v(0, 1)), 1);
  EXPECT_EQ(symp_form_z4(v(0, 1), v(1, 0)), 3);  // sign flip under swap
  EXPECT_EQ(symp_form_z4(v(0, 1), v(3, 0)), 1);  // -3 = 1 mod 4
}

TEST(SympFormZ4, Antisymmetry) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::uint8_t> a(6), b(6);
    for (auto& e : a) e = rng() & 3;
    for (auto& e : b) e = rng() & 3;
    Z4Vec x(a), y(b);
    EXPECT_EQ((symp_form_z4(x, y) + symp_form_z4(y, x)) % 4, 0);
  }
}

TEST(BitMat, IdentityActsTrivially) {
  BitMat id = BitMat::identity(6);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    BitVec x(6, rng());
    EXPECT_EQ(mat_vec(id, x), x);
  }
  EXPECT_EQ(mat_inv(id), id);
}

TEST(BitMat, GramMatrixIsSelfInverse) {
  for (std::size_t n = 1; n <= 3; ++n) {
    BitMat j = BitMat::symplectic_gram(2 * n);
    EXPECT_EQ(mat_mul(mat_inv(j), j), BitMat::identity(2 * n));
    EXPECT_EQ(mat_mul(j, j), BitMat::identity(2 * n));
  }
}

TEST(BitMat, GramMatchesForm) {
  std::size_t dim = 6;
  BitMat j = BitMat::symplectic_gram(dim);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    BitVec x(dim, rng()), y(dim, rng());
    EXPECT_EQ(symp_form_z2(x, y), BitVec::dot(x, mat_vec(j, y)));
  }
}

TEST(BitMat, SingularInverseThrows) {
  BitMat m(2, 2);
  m.set(0, 0, true);
  m.set(1, 0, true);  // two equal columns -> singular
  EXPECT_THROW(mat_inv(m), std::invalid_argument);
}

TEST(SolveGf2, LexicographicMinimum) {
  // x0 + x1 = 1 has solutions {10, 01}; lexicographic order prefers x0 = 0.
  BitMat a(1, 2);
  a.set(0, 0, true);
  a.set(0, 1, true);
  bool solvable = false;
  BitVec x = solve_gf2_lex_min(a, BitVec(1, 1), &solvable);
  ASSERT_TRUE(solvable);
  EXPECT_FALSE(x.get(0));
  EXPECT_TRUE(x.get(1));
}

TEST(SolveGf2, DetectsInconsistency) {
  BitMat a(2, 2);
  a.set(0, 0, true);
  a.set(1, 0, true);
  bool solvable = true;
  BitVec rhs = BitVec(2, 0b01);  // x0 = 1 and x0 = 0
  solve_gf2_lex_min(a, rhs, &solvable);
  EXPECT_FALSE(solvable);
}

TEST(Z4Vec, LiftReduceRoundTrip) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    BitVec x(8, rng());
    EXPECT_EQ(Z4Vec::lift(x).reduce(), x);
  }
}

}  // namespace
}  // namespace cliffchar
