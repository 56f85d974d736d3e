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

#include "cliffchar/inertia.hpp"

#include <random>

#include "cliffchar/exact_matrix.hpp"
#include "gtest/gtest.h"

namespace cliffchar {
namespace {

BitVec pq(std::size_t n, std::uint64_t p_bits, std::uint64_t q_bits) {
  return BitVec(2 * n, p_bits | (q_bits << n));
}

PauliElement pauli(std::size_t n, std::uint64_t p_bits, std::uint64_t q_bits,
                   int phase = 0) {
  return PauliElement(std::uint8_t(phase & 3), pq(n, p_bits, q_bits));
}

const GroupEnumeration& c1() {
  static GroupEnumeration g = enumerate_clifford(1);
  return g;
}

const GroupEnumeration& c2() {
  static GroupEnumeration g = enumerate_clifford(2);
  return g;
}

const InertiaData& in1() {
  static InertiaData d = enumerate_inertia(1, &c1());
  return d;
}

const InertiaData& in2() {
  static InertiaData d = enumerate_inertia(2, &c2());
  return d;
}

TEST(Membership, PauliEmbedsAlwaysInside) {
  for (std::uint64_t y = 0; y < 16; ++y) {
    EXPECT_TRUE(is_in_inertia(pauli_embed(BitVec(4, y))));
  }
}

TEST(Membership, PhaseGateOutsideHadamardInside) {
  EXPECT_FALSE(is_in_inertia(clifford_s(1, 0)));  // S moves [Y] to [X]
  EXPECT_TRUE(is_in_inertia(clifford_h(1, 0)));   // H fixes [Y] projectively
  EXPECT_FALSE(is_in_inertia(clifford_s(2, 0)));
  EXPECT_TRUE(is_in_inertia(clifford_s(2, 1)));   // other-qubit gates stay inside
}

TEST(MElement, PrintedConjugationRelations) {
  CliffordElement m = inertia_m_element(2);
  // X(x)I -> -Z(x)X
  EXPECT_EQ(apply(m, pauli(2, 0b00, 0b01)), pauli(2, 0b01, 0b10, 2));
  // Z(x)I -> X(x)X
  EXPECT_EQ(apply(m, pauli(2, 0b01, 0b00)), pauli(2, 0b00, 0b11));
  // I(x)X -> I(x)X
  EXPECT_EQ(apply(m, pauli(2, 0b00, 0b10)), pauli(2, 0b00, 0b10));
  // I(x)Z -> -ZX(x)ZX = Y(x)Y = W_{(11|11)}
  EXPECT_EQ(apply(m, pauli(2, 0b10, 0b00)), pauli(2, 0b11, 0b11));
}

TEST(MElement, MatchesDenseMatrixConjugation) {
  // The (Gamma, s) data is pinned by the four conjugation relations, which
  // as a dense unitary is CX (HZ (x) X) CX. The displayed 1/sqrt2 matrix
  // [[0,1,1,0],[1,0,0,1],[-1,0,0,1],[0,-1,1,0]] is CX (ZH (x) X) CX instead;
  // the two differ by the Pauli factor W_{Y(x)X}, so they generate the same
  // inertia subgroup and carry the same sigma_1' value.
  ExactMatrix printed(4);
  const int entries[4][4] = {
      {0, 1, 1, 0}, {1, 0, 0, 1}, {-1, 0, 0, 1}, {0, -1, 1, 0}};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      printed.at(r, c) =
          ExactScalar{0, 0, Rational(entries[r][c], 2), 0};  // k/sqrt2
    }
  }
  ExactMatrix zh_version =
      cx_matrix(2, 0, 1) *
      ExactMatrix::kron(pauli_z_matrix() * hadamard_matrix(), pauli_x_matrix()) *
      cx_matrix(2, 0, 1);
  EXPECT_EQ(zh_version, printed);

  ExactMatrix m_dense =
      cx_matrix(2, 0, 1) *
      ExactMatrix::kron(hadamard_matrix() * pauli_z_matrix(), pauli_x_matrix()) *
      cx_matrix(2, 0, 1);
  // Same projective element up to the W_{Y(x)X} factor (and a global phase).
  bool same_up_to_phase = false;
  for (int k = 0; k < 4 && !same_up_to_phase; ++k) {
    same_up_to_phase =
        m_dense ==
        (printed * matrix_oracle(pauli(2, 0b01, 0b11))).scaled(ExactScalar::i_power(k));
  }
  EXPECT_TRUE(same_up_to_phase);

  CliffordElement m = inertia_m_element(2);
  for (std::size_t j = 0; j < 4; ++j) {
    PauliElement basis = PauliElement::basis(2, j);
    EXPECT_EQ(matrix_oracle(apply(m, basis)), conjugate(m_dense, matrix_oracle(basis)));
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    PauliElement p(std::uint8_t(rng() & 3), BitVec(4, rng()));
    EXPECT_EQ(matrix_oracle(apply(m, p)), conjugate(m_dense, matrix_oracle(p)));
  }
}

TEST(EnumerateInertia, OrdersAndIndices) {
  EXPECT_EQ(in1().group.order(), 8u);
  EXPECT_EQ(c1().order() / in1().group.order(), 3u);
  EXPECT_EQ(in2().group.order(), 768u);
  EXPECT_EQ(c2().order() / in2().group.order(), 15u);
}

TEST(EnumerateInertia, GeneratedEqualsStabilizer) {
  // Exhaustive agreement is enforced inside enumerate_inertia when the
  // ambient group is supplied; it must also hold as a direct recount.
  std::uint64_t stabilizer = 0;
  for (std::uint64_t packed : c2().elements()) {
    stabilizer += is_in_inertia(unpack_clifford(packed, 2));
  }
  EXPECT_EQ(stabilizer, in2().group.order());
}

TEST(Sigma1Prime, GeneratorValues) {
  const InertiaData& d = in2();
  EXPECT_EQ(d.sigma1_prime_at(pack_clifford(pauli_embed(BitVec::unit(4, 2)))), -1);
  EXPECT_EQ(d.sigma1_prime_at(pack_clifford(clifford_h(2, 0))), 1);
  EXPECT_EQ(d.sigma1_prime_at(pack_clifford(inertia_m_element(2))), 1);
}

TEST(Sigma1Prime, RestrictionToEmbedsIsSigma1) {
  for (const InertiaData* d : {&in1(), &in2()}) {
    std::size_t dim = 2 * d->n;
    PauliCharacter sigma1 = PauliCharacter::sigma1(d->n);
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << dim); ++y) {
      BitVec yv(dim, y);
      EXPECT_EQ(d->sigma1_prime_at(pack_clifford(pauli_embed(yv))),
                char_value(sigma1, yv));
    }
  }
}

TEST(Sigma1Prime, MultiplicativeExhaustiveOneQubit) {
  const InertiaData& d = in1();
  for (std::uint64_t a : d.group.elements()) {
    for (std::uint64_t b : d.group.elements()) {
      EXPECT_EQ(d.sigma1_prime_at(d.group.mul(a, b)),
                d.sigma1_prime_at(a) * d.sigma1_prime_at(b));
    }
  }
}

TEST(Sigma1Prime, MultiplicativeOnRandomTwoQubitPairs) {
  const InertiaData& d = in2();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10'000; ++trial) {
    std::uint64_t a = d.group.elements()[rng() % d.group.order()];
    std::uint64_t b = d.group.elements()[rng() % d.group.order()];
    EXPECT_EQ(d.sigma1_prime_at(d.group.mul(a, b)),
              d.sigma1_prime_at(a) * d.sigma1_prime_at(b));
  }
}

TEST(AffineGroup, OrdersAndAxioms) {
  GroupEnumeration a1 = enumerate_affine(1);
  EXPECT_EQ(a1.order(), 24u);
  GroupEnumeration a2 = enumerate_affine(2);
  EXPECT_EQ(a2.order(), 11520u);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    AffineSympElement x = unpack_affine(a2.elements()[rng() % a2.order()], 2);
    AffineSympElement y = unpack_affine(a2.elements()[rng() % a2.order()], 2);
    AffineSympElement z = unpack_affine(a2.elements()[rng() % a2.order()], 2);
    EXPECT_EQ(affine_mul(affine_mul(x, y), z), affine_mul(x, affine_mul(y, z)));
    EXPECT_EQ(affine_mul(x, affine_inv(x)), AffineSympElement::identity(2));
  }
}

TEST(QuotientMap, OtherQubitGatesMapToTheirSymplecticPart) {
  AffineSympElement h = quotient_map_affine(clifford_h(2, 1));
  EXPECT_TRUE(h.translation.is_zero());
  EXPECT_EQ(h.linear, clifford_h(1, 0).gamma);
  AffineSympElement s = quotient_map_affine(clifford_s(2, 1));
  EXPECT_TRUE(s.translation.is_zero());
  EXPECT_EQ(s.linear, clifford_s(1, 0).gamma);
}

TEST(QuotientMap, KernelContainsH1AndEmbeds) {
  EXPECT_EQ(quotient_map_affine(clifford_h(2, 0)), AffineSympElement::identity(1));
  for (std::uint64_t y = 0; y < 16; ++y) {
    EXPECT_EQ(quotient_map_affine(pauli_embed(BitVec(4, y))),
              AffineSympElement::identity(1));
  }
}

TEST(QuotientMap, MCompositeTranslatesByX2) {
  CliffordElement s2 = clifford_s(2, 1), h2 = clifford_h(2, 1);
  CliffordElement composite =
      mul(inertia_m_element(2), mul(s2, mul(h2, inv(s2))));
  AffineSympElement image = quotient_map_affine(composite);
  EXPECT_EQ(image.translation, BitVec::unit(2, 1));  // X index on the last qubit
  EXPECT_EQ(image.linear, SympMatrix::identity(1));
}

TEST(QuotientMap, IsVerifiedSurjectiveHomomorphismWithRightKernel) {
  const InertiaData& d = in2();
  GroupEnumeration a1 = enumerate_affine(1);
  std::vector<std::uint32_t> image(d.group.order());
  std::uint64_t kernel = 0;
  for (std::uint32_t i = 0; i < d.group.order(); ++i) {
    image[i] = a1.index_of(d.affine_image[i]);
    kernel += d.affine_image[i] == a1.identity();
  }
  // Throws if not a surjective class-compatible homomorphism.
  QuotientHandle handle = make_quotient_handle(d.group, a1, image);
  EXPECT_EQ(kernel, 32u);  // |H_{1,n}| = 2^{2n+1}
  EXPECT_EQ(d.group.order() / kernel, a1.order());
  (void)handle;
}

TEST(PhiMap, IdentityAndBijectivity) {
  EXPECT_EQ(phi_map(BitVec::zeros(2), SympMatrix::identity(1), in1()),
            CliffordElement::identity(1));
  GroupEnumeration a1 = enumerate_affine(1);
  FlatMap64 images;
  for (std::uint64_t packed : a1.elements()) {
    images.insert(pack_clifford(phi_map_packed(packed, in1())), 0);
  }
  EXPECT_EQ(images.size(), c1().order());
}

TEST(PhiMap, TwoQubitBijectivity) {
  GroupEnumeration a2 = enumerate_affine(2);
  FlatMap64 images;
  for (std::uint64_t packed : a2.elements()) {
    std::uint64_t image = pack_clifford(phi_map_packed(packed, in2()));
    EXPECT_TRUE(c2().contains(image));
    images.insert(image, 0);
  }
  EXPECT_EQ(images.size(), c2().order());
}

TEST(PhiMap, SectionIsNormalized) {
  // sigma_1'(t(Gamma)) = +1 on the whole stabilizer, and t has the right
  // symplectic part everywhere.
  for (const InertiaData* d : {&in1(), &in2()}) {
    GroupEnumeration sp = enumerate_sp(d->n);
    BitVec y1 = inertia_fixed_vector(d->n);
    for (std::uint64_t packed : sp.elements()) {
      SympMatrix gamma = unpack_symp(packed, d->n);
      CliffordElement t = phi_section(gamma, *d);
      EXPECT_EQ(t.gamma, gamma);
      if (mat_vec(gamma.mat, y1) == y1) {
        EXPECT_EQ(d->sigma1_prime_at(pack_clifford(t)), 1);
      }
    }
  }
}

TEST(PhiMap, SigmaDoublePrimeCompatibility) {
  // sigma_1''(x, Gamma) = sigma_1(x) must equal sigma_1'(phi(x, Gamma)) on
  // the affine stabilizer of sigma_1, exhaustively for n <= 2.
  struct Case {
    const InertiaData* d;
    std::size_t n;
  };
  for (const Case& c : {Case{&in1(), 1}, Case{&in2(), 2}}) {
    GroupEnumeration an = enumerate_affine(c.n);
    PauliCharacter sigma1 = PauliCharacter::sigma1(c.n);
    BitVec y1 = inertia_fixed_vector(c.n);
    std::uint64_t stabilizer_size = 0;
    for (std::uint64_t packed : an.elements()) {
      AffineSympElement s = unpack_affine(packed, c.n);
      if (!(mat_vec(s.linear.mat, y1) == y1)) continue;
      ++stabilizer_size;
      CliffordElement image = phi_map(s.translation, s.linear, *c.d);
      EXPECT_EQ(c.d->sigma1_prime_at(pack_clifford(image)),
                char_value(sigma1, s.translation));
    }
    EXPECT_EQ(stabilizer_size, c.d->group.order());
  }
}

TEST(EnumerateInertia, MismatchedGeneratorsWouldFailLoudly) {
  // Sanity that the order check is active: budget exhaustion surfaces too.
  ClosureBudget tiny;
  tiny.max_elements = 10;
  EXPECT_THROW(enumerate_inertia(2, nullptr, tiny), std::runtime_error);
}

}  // namespace
}  // namespace cliffchar
