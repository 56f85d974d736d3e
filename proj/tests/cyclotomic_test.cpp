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

#include "cliffchar/cyclotomic.hpp"

#include <random>

#include "gtest/gtest.h"

namespace cliffchar {
namespace {

TEST(Rational, ArithmeticAndNormalForm) {
  Rational half(1, 2), third(BigInt(1), BigInt(3));
  EXPECT_EQ((half + third).to_string(), "5/6");
  EXPECT_EQ((half * third).to_string(), "1/6");
  EXPECT_EQ((half - half).to_string(), "0");
  EXPECT_EQ(Rational(BigInt(-4), BigInt(-6)).to_string(), "2/3");
  EXPECT_EQ(Rational(BigInt(4), BigInt(-6)).to_string(), "-2/3");
  EXPECT_THROW(half / Rational(0), std::invalid_argument);
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST(CyclotomicPolynomial, SmallCases) {
  using V = std::vector<BigInt>;
  EXPECT_EQ(cyclotomic_polynomial(1), (V{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), (V{1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (V{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(3), (V{1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (V{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (V{1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, RootOfUnityRelations) {
  for (std::uint32_t m : {2u, 3u, 4u, 5u, 6u, 8u, 12u, 24u}) {
    Cyclotomic z = Cyclotomic::zeta_power(m, 1);
    Cyclotomic acc(1);
    for (std::uint32_t k = 0; k < m; ++k) acc *= z;
    EXPECT_EQ(acc, Cyclotomic(1)) << "zeta_" << m << "^" << m;
    // Sum over all m-th roots of unity vanishes for m > 1.
    Cyclotomic sum;
    for (std::uint32_t k = 0; k < m; ++k) sum += Cyclotomic::zeta_power(m, k);
    EXPECT_EQ(sum, Cyclotomic(0));
  }
}

TEST(Cyclotomic, KnownIdentities) {
  // zeta_4 = i: i^2 = -1.
  Cyclotomic i = Cyclotomic::zeta_power(4, 1);
  EXPECT_EQ(i * i, Cyclotomic(-1));
  // zeta_8 + zeta_8^-1 = sqrt2: squares to 2.
  Cyclotomic rt2 = Cyclotomic::zeta_power(8, 1) + Cyclotomic::zeta_power(8, 7);
  EXPECT_EQ(rt2 * rt2, Cyclotomic(2));
  // zeta_3 satisfies 1 + z + z^2 = 0.
  Cyclotomic z3 = Cyclotomic::zeta_power(3, 1);
  EXPECT_EQ(Cyclotomic(1) + z3 + z3 * z3, Cyclotomic(0));
}

TEST(Cyclotomic, MixedConductorArithmetic) {
  // zeta_6 = -zeta_3^2 = zeta_2 * zeta_3^2.
  Cyclotomic z6 = Cyclotomic::zeta_power(6, 1);
  Cyclotomic z3 = Cyclotomic::zeta_power(3, 1);
  EXPECT_EQ(z6, -(z3 * z3));
  EXPECT_EQ(z6, Cyclotomic::zeta_power(2, 1) * z3 * z3);
  EXPECT_EQ(z6 + z3 * z3, Cyclotomic(0));
}

TEST(Cyclotomic, ConjugationIsInvolutionAndFixesRationals) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Cyclotomic v;
    for (int term = 0; term < 4; ++term) {
      v += Cyclotomic::zeta_power(12, rng() % 12)
               .scaled(Rational(std::int64_t(rng() % 7) - 3));
    }
    EXPECT_EQ(v.conj().conj(), v);
    Cyclotomic norm = v * v.conj();
    EXPECT_EQ(norm.conj(), norm);  // |v|^2 is real
  }
  EXPECT_EQ(Cyclotomic(-5).conj(), Cyclotomic(-5));
}

TEST(Cyclotomic, RationalDetectionAndPrinting) {
  Cyclotomic z8 = Cyclotomic::zeta_power(8, 1);
  Cyclotomic v = z8 * z8 * z8 * z8;  // = -1
  EXPECT_TRUE(v.is_rational());
  EXPECT_TRUE(v.is_integer());
  EXPECT_EQ(v.to_string(), "-1");
  EXPECT_EQ((Cyclotomic(3).scaled(Rational(1, 2))).to_string(), "3/2");
  Cyclotomic mixed = Cyclotomic(2) + Cyclotomic::zeta_power(8, 3).scaled(Rational(-1));
  EXPECT_EQ(mixed.to_string(), "2 - z8^3");
  EXPECT_THROW(mixed.rational_value(), std::logic_error);
}

}  // namespace
}  // namespace cliffchar
