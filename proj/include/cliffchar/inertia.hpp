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

#ifndef CLIFFCHAR_INERTIA_HPP
#define CLIFFCHAR_INERTIA_HPP

#include <cstdint>
#include <vector>

#include "cliffchar/clifford.hpp"
#include "cliffchar/group.hpp"

namespace cliffchar {

// ---------------------------------------------------------------------------
// The inertia subgroup IN_n of sigma_1 inside C_n, its degree-1 extension
// sigma_1', the quotient map onto the affine symplectic group
// Sp(2(n-1),2) |x Z2^{2(n-1)}, and the phi correspondence between the
// abstract affine group and C_n.
// ---------------------------------------------------------------------------

/// |C_n| = 2^{n^2+2n} prod_{j=1}^{n} (2^{2j} - 1). n = 0 gives 1.
BigInt clifford_order(std::size_t n);

/// y_1: the index vector of X_1 Z_1 (the [Y_1] class). Membership in IN_n is
/// the stabilizer condition Gamma y_1 = y_1: the dual action sends the label
/// a to Gamma^{-T} a = J Gamma J a, so fixing the label a_1 of sigma_1 is the
/// same as fixing y_1 = J a_1, and J a_1 = a_1 here.
BitVec inertia_fixed_vector(std::size_t n);

bool is_in_inertia(const CliffordElement& g);

/// The entangling inertia generator acting on qubits 1 and 2; its (Gamma, s)
/// is pinned by the four conjugation relations
///   X(x)I -> -Z(x)X,  Z(x)I -> X(x)X,  I(x)X -> I(x)X,  I(x)Z -> Y(x)Y
/// and validated against its dense 4x4 matrix in the tests.
CliffordElement inertia_m_element(std::size_t n);

/// n = 1: {H, X-embed, Z-embed}. n >= 2: {M, H_1, X_1-embed} plus the
/// standard generators of the Clifford group on qubits 2..n.
std::vector<CliffordElement> inertia_generators(std::size_t n);

// ---------------------------------------------------------------------------
// The abstract affine symplectic group Sp(2m,2) |x Z2^{2m}. Product rule
// (v1, G1)(v2, G2) = (v1 + G1 v2, G1 G2). Packed as 2m translation bits in
// the low word followed by the 4m^2 matrix bits.
// ---------------------------------------------------------------------------
struct AffineSympElement {
  BitVec translation;  // length 2m
  SympMatrix linear;

  static AffineSympElement identity(std::size_t m);
  std::size_t m() const { return translation.length() / 2; }
  bool operator==(const AffineSympElement& other) const = default;
};

AffineSympElement affine_mul(const AffineSympElement& a, const AffineSympElement& b);
AffineSympElement affine_inv(const AffineSympElement& a);

std::uint64_t pack_affine(const AffineSympElement& a);
AffineSympElement unpack_affine(std::uint64_t packed, std::size_t m);

class AffineOps final : public GroupOps {
 public:
  explicit AffineOps(std::size_t m);
  std::uint64_t identity() const override;
  std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const override;
  std::uint64_t inverse(std::uint64_t a) const override;
  std::string describe() const override;
  std::size_t m() const { return m_; }

 private:
  std::size_t m_;
};

/// Materializes the full affine group (no BFS needed: it is Sp x Z2^{2m} as
/// a set) with classes computed from translation + transvection generators.
GroupEnumeration enumerate_affine(std::size_t m,
                                  ExecPolicy policy = ExecPolicy::kSerial);

// ---------------------------------------------------------------------------
// Enumerated inertia data
// ---------------------------------------------------------------------------
struct InertiaData {
  std::size_t n = 0;
  BitVec y1;
  std::vector<CliffordElement> generator_elements;
  GroupEnumeration group;                 // packed Clifford elements
  std::vector<std::int8_t> sigma1_prime;  // value per element index, +-1
  /// Packed affine image (m = n-1) per element index; empty when n = 1.
  std::vector<std::uint64_t> affine_image;

  int sigma1_prime_at(std::uint64_t packed_element) const;
};

/// BFS closure of the inertia generators with sigma_1' propagated along the
/// way (value -1 on the X_1 embed, +1 on every other generator; any
/// propagation conflict throws, since it would contradict well-definedness).
/// The order must come out as 2^{2n+1} |C_{n-1}|. When `ambient` is given,
/// the generated subgroup is checked against the stabilizer set
/// {g : Gamma_g y_1 = y_1} exhaustively; a mismatch is a hard error.
InertiaData enumerate_inertia(std::size_t n,
                              const GroupEnumeration* ambient = nullptr,
                              const ClosureBudget& budget = {},
                              ExecPolicy policy = ExecPolicy::kSerial);

/// Image of g under IN_n -> Sp(2(n-1),2) |x Z2^{2(n-1)}: conjugating the
/// inertia Weyl operators X (x) W_x maps indices affinely, x -> A x + v.
/// The translation is read off the image of X_1 (first-qubit letter and sign
/// discarded), the linear part from the images of X (x) W_{e_j}. The same
/// data computed through the Z-row must agree; a mismatch throws.
AffineSympElement quotient_map_affine(const CliffordElement& g);

/// The section t: Sp(2n,2) -> C_n underlying the phi correspondence.
/// Off the stabilizer of y_1 it is the canonical zero-sign representative
/// (Gamma, 0). On the stabilizer, where sigma_1' is defined, the zero-sign
/// representative is twisted by the X_1 embed whenever its sigma_1' value is
/// -1, so that sigma_1'(t(Gamma)) = +1 always. Without this normalization
/// the Fischer correspondence fails: 36 of the 48 stabilizer Gammas at n = 2
/// carry sigma_1' = -1 on their zero-sign representative.
CliffordElement phi_section(const SympMatrix& gamma, const InertiaData& inertia);

/// phi(x, Gamma) = W_x-embed * t(Gamma). Bijective onto C_n (not a
/// homomorphism); `inertia` must be the inertia data at the same n.
CliffordElement phi_map(const BitVec& x, const SympMatrix& gamma,
                        const InertiaData& inertia);
CliffordElement phi_map_packed(std::uint64_t packed_affine,
                               const InertiaData& inertia);

}  // namespace cliffchar

#endif  // CLIFFCHAR_INERTIA_HPP
