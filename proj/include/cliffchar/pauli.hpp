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

#ifndef CLIFFCHAR_PAULI_HPP
#define CLIFFCHAR_PAULI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cliffchar/bitvec.hpp"

namespace cliffchar {

// ---------------------------------------------------------------------------
// PauliElement: i^phase * W_x, the canonical form of an n-qubit Pauli
// operator. W_x is the Weyl operator indexed by x = (p|q) in Z2^{2n},
//
//   W_x = i^{-p.q} (Z^{p_1} X^{q_1}) (x) ... (x) (Z^{p_n} X^{q_n}).
//
// The phase exponent is kept mod 4; the index is always a bit vector.
// Mod-4 index vectors are never stored: products reduce them on the fly,
// using W_{x+2z} = (-1)^{[x,z]} W_x. This makes (phase, index) a unique
// normal form, so elements hash and pack cleanly.
// ---------------------------------------------------------------------------
struct PauliElement {
  std::uint8_t phase = 0;  // exponent of i, mod 4
  BitVec index;            // x in Z2^{2n}

  PauliElement() = default;
  PauliElement(std::uint8_t phase_exponent, BitVec idx);

  static PauliElement identity(std::size_t n);
  /// The basis Weyl operator W_{e_j} (phase 0).
  static PauliElement basis(std::size_t n, std::size_t j);

  std::size_t num_qubits() const { return index.length() / 2; }
  bool operator==(const PauliElement& other) const = default;

  /// Name like "i.Y(x)X" or "-Z(x)1" (single qubit: "X", "-Y", ...).
  std::string to_string() const;
};

/// Exact product of two Pauli elements:
///   W_x W_y = i^{[x,y]} W_{x+y}  (indices mod 4, then Weyl1-reduced).
/// Throws std::invalid_argument on size mismatch.
PauliElement weyl_mul(const PauliElement& a, const PauliElement& b);

/// Phase c with product_{j ascending, x_j = 1} W_{e_j} = i^c W_x. Every sign
/// reconstruction in the Clifford layer depends on this fixed ascending
/// decomposition order.
int basis_decomposition_phase(const BitVec& x);

// ---------------------------------------------------------------------------
// PauliCharacter: one of the 4^n degree-1 characters of the projective Pauli
// group, stored as its label vector a:  chi_a([W_x]) = (-1)^{a.x}.
// Labels multiply additively: chi_a chi_b = chi_{a+b}.
// ---------------------------------------------------------------------------
struct PauliCharacter {
  BitVec label;

  static PauliCharacter trivial(std::size_t n);
  /// sigma_1: the distinguished character with value -1 on [X_1] and [Z_1]
  /// and +1 on all other qubits' generators.
  static PauliCharacter sigma1(std::size_t n);

  bool is_trivial() const { return label.is_zero(); }
  bool operator==(const PauliCharacter& other) const = default;
};

/// Evaluates chi_a on the projective class [W_x]: returns +1 or -1.
int char_value(const PauliCharacter& a, const BitVec& x);

// ---------------------------------------------------------------------------
// The full character table of the projective Pauli group: a 4^n x 4^n sign
// matrix. Rows and columns are indexed by per-qubit letters in the order
// I, X, Z, Y (qubit 1 as the most significant base-4 digit), which matches
// the usual printed layout for n = 1.
// ---------------------------------------------------------------------------
struct PauliCharacterTable {
  std::size_t n = 0;
  std::vector<std::vector<int>> values;  // values[row][col] in {+1, -1}

  std::string column_label(std::size_t col) const;  // e.g. "[XZ]"
  std::string row_label(std::size_t col) const;     // e.g. "psi_3"
};

/// Converts a table row/column index (per-qubit base-4 digits, letter order
/// I, X, Z, Y) to an index vector in the (p|q) layout.
BitVec table_index_to_bitvec(std::size_t n, std::size_t table_index);

/// Builds the 4^n x 4^n table. Throws if n is 0 or greater than `max_n`
/// (dense output grows as 16^n; 8 is already a 4-billion-entry table).
PauliCharacterTable pauli_char_table(std::size_t n, std::size_t max_n = 8);

}  // namespace cliffchar

#endif  // CLIFFCHAR_PAULI_HPP
