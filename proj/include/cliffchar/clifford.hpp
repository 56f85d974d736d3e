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

#ifndef CLIFFCHAR_CLIFFORD_HPP
#define CLIFFCHAR_CLIFFORD_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "cliffchar/group.hpp"
#include "cliffchar/pauli.hpp"
#include "cliffchar/symplectic.hpp"

namespace cliffchar {

// ---------------------------------------------------------------------------
// The projective Clifford group C_n, represented exactly.
//
// An element is the pair (Gamma, s): Gamma in Sp(2n,2) and a sign vector
// s in Z2^{2n} recording its conjugation action on the basis Weyl operators,
//
//   U W_{e_j} U^dagger = (-1)^{s_j} W_{Gamma e_j}.
//
// This parametrization is faithful and bijective onto C_n. The action on a
// general W_x is NOT determined coordinate-wise by s: the sign function f
// with U W_x U^dagger = (-1)^{f(x)} W_{Gamma x} is non-linear off the basis
// (its cocycle involves the Z4 discrepancy of the symplectic form under
// Gamma). apply() therefore reconstructs f(x) by decomposing W_x into basis
// Weyl operators in a globally fixed ascending index order; that order is
// part of the element's semantic contract and must never change.
// ---------------------------------------------------------------------------
struct CliffordElement {
  SympMatrix gamma;
  BitVec signs;

  CliffordElement() = default;
  CliffordElement(SympMatrix g, BitVec s);

  static CliffordElement identity(std::size_t n);

  std::size_t num_qubits() const { return signs.length() / 2; }
  bool operator==(const CliffordElement& other) const = default;
};

/// Image of i^k W_x under conjugation by g. The Weyl part only ever acquires
/// a sign; an odd phase on it indicates a corrupted element and throws
/// std::logic_error. The incoming scalar i^k carries through unchanged.
PauliElement apply(const CliffordElement& g, const PauliElement& p);

/// Sign exponent f_g(x) with g W_x g^dagger = (-1)^{f_g(x)} W_{Gamma x}.
int sign_function(const CliffordElement& g, const BitVec& x);

/// Composition: gamma multiplies, signs are reconstructed through apply.
CliffordElement mul(const CliffordElement& g, const CliffordElement& h);

CliffordElement inv(const CliffordElement& g);

/// The image of the Weyl operator W_y in C_n: conjugation by W_y flips the
/// sign of W_x exactly when [y, x] = 1, so the element is (I, s) with
/// s_j = [y, e_j].
CliffordElement pauli_embed(const BitVec& y);

// Generator constructors (all signs validated against the dense oracle in
// the test suite).
CliffordElement clifford_h(std::size_t n, std::size_t qubit);
CliffordElement clifford_s(std::size_t n, std::size_t qubit);
CliffordElement clifford_cz(std::size_t n, std::size_t qubit_a, std::size_t qubit_b);

/// H_i and S_i on every qubit, CZ_{ab} on every pair, and the Pauli embeds
/// of all basis Weyl operators, in that order.
std::vector<CliffordElement> standard_generators(std::size_t n);

// ---------------------------------------------------------------------------
// Packing: 4n^2 bits of Gamma (row-major) in the low bits, then 2n sign
// bits. 42 bits for n = 3, so an element is a single hashable word.
// ---------------------------------------------------------------------------
std::uint64_t pack_clifford(const CliffordElement& g);
CliffordElement unpack_clifford(std::uint64_t packed, std::size_t n);

class CliffordOps final : public GroupOps {
 public:
  explicit CliffordOps(std::size_t n);
  std::uint64_t identity() const override;
  std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const override;
  std::uint64_t inverse(std::uint64_t a) const override;
  std::string describe() const override;
  std::size_t num_qubits() const { return n_; }

 private:
  std::size_t n_;
};

/// Enumerates C_n from the standard generators. n <= 2 unconditionally;
/// n = 3 (about 9.3e7 elements) only with allow_large set.
GroupEnumeration enumerate_clifford(std::size_t n,
                                    const ClosureBudget& budget = {},
                                    ExecPolicy policy = ExecPolicy::kSerial,
                                    bool allow_large = false);

// ---------------------------------------------------------------------------
// Dual action on Pauli characters: (g chi_a)(x) = chi_a(Gamma^{-1} x), i.e.
// the label maps by Gamma^{-T} = J Gamma J.
// ---------------------------------------------------------------------------
PauliCharacter act_on_character(const CliffordElement& g, const PauliCharacter& a);

/// Orbit of a character label under <standard generators>.
std::vector<BitVec> character_orbit(std::size_t n, const PauliCharacter& a);

/// A g with act_on_character(g, a) = b, found by BFS over generator words.
/// Both labels must be nonzero (the trivial character is a fixed point);
/// throws std::invalid_argument otherwise.
CliffordElement find_conjugator(const PauliCharacter& a, const PauliCharacter& b);

}  // namespace cliffchar

#endif  // CLIFFCHAR_CLIFFORD_HPP
