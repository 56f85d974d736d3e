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

#ifndef CLIFFCHAR_BITVEC_HPP
#define CLIFFCHAR_BITVEC_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace cliffchar {

/// Exact linear algebra over Z2 and Z4 for phase-space index vectors and
/// symplectic matrices.
///
/// Vectors of length 2n use the fixed coordinate layout (p_1..p_n | q_1..q_n):
/// coordinate j < n is p_{j+1}, coordinate n+j is q_{j+1}. Every module in
/// this library relies on that order; with it the symplectic Gram matrix J
/// is the block anti-diagonal [[0, I], [I, 0]] over GF(2).
///
/// Bit vectors and matrices are packed into 64-bit words (dimension <= 64),
/// which covers n <= 16 qubits.

// ---------------------------------------------------------------------------
// BitVec: an element of Z2^L, L <= 64.
// ---------------------------------------------------------------------------
class BitVec {
 public:
  BitVec() : length_(0), bits_(0) {}
  BitVec(std::size_t length, std::uint64_t bits);

  static BitVec zeros(std::size_t length);
  static BitVec unit(std::size_t length, std::size_t index);

  std::size_t length() const { return length_; }
  std::uint64_t bits() const { return bits_; }
  bool get(std::size_t index) const;
  BitVec with_bit(std::size_t index, bool value) const;

  bool is_zero() const { return bits_ == 0; }

  BitVec operator^(const BitVec& other) const;
  BitVec operator&(const BitVec& other) const;
  bool operator==(const BitVec& other) const = default;

  /// Parity of the standard dot product a.b over Z2.
  static int dot(const BitVec& a, const BitVec& b);

  std::string to_string() const;  // e.g. "(10|01)" for length 4

 private:
  std::size_t length_;
  std::uint64_t bits_;
};

// ---------------------------------------------------------------------------
// Z4Vec: an element of Z4^L. Kept as a distinct type from BitVec so that a
// mod-2 index vector is never silently used where mod-4 arithmetic is meant.
// ---------------------------------------------------------------------------
class Z4Vec {
 public:
  Z4Vec() = default;
  explicit Z4Vec(std::vector<std::uint8_t> entries);

  /// Canonical lift of a bit vector: entries 0/1.
  static Z4Vec lift(const BitVec& v);

  std::size_t length() const { return entries_.size(); }
  std::uint8_t get(std::size_t index) const;
  void set(std::size_t index, std::uint8_t value);

  /// Mod-2 reduction.
  BitVec reduce() const;

  Z4Vec operator+(const Z4Vec& other) const;
  bool operator==(const Z4Vec& other) const = default;

 private:
  std::vector<std::uint8_t> entries_;  // each reduced mod 4
};

// ---------------------------------------------------------------------------
// BitMat: a rows x cols matrix over GF(2), one 64-bit word per row.
// ---------------------------------------------------------------------------
class BitMat {
 public:
  BitMat() : rows_(0), cols_(0) {}
  BitMat(std::size_t rows, std::size_t cols);

  static BitMat identity(std::size_t n);
  /// The symplectic Gram matrix J of dimension 2n: block [[0,I],[I,0]].
  static BitMat symplectic_gram(std::size_t two_n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);

  std::uint64_t row_bits(std::size_t r) const;
  void set_row_bits(std::size_t r, std::uint64_t bits);

  /// Column c as a BitVec of length rows().
  BitVec column(std::size_t c) const;
  void set_column(std::size_t c, const BitVec& v);

  BitMat transpose() const;
  bool operator==(const BitMat& other) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> row_words_;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Symplectic form [x,y] = p.q' - q.p' reduced mod 2 (equivalently p.q'+q.p').
/// Throws std::invalid_argument on length mismatch or odd length.
int symp_form_z2(const BitVec& x, const BitVec& y);

/// Symplectic form p.q' - q.p' reduced mod 4 on Z4 vectors.
int symp_form_z4(const Z4Vec& x, const Z4Vec& y);

/// Exact GF(2) matrix product. Throws on dimension mismatch.
BitMat mat_mul(const BitMat& a, const BitMat& b);

/// Matrix-vector product over GF(2). Throws on dimension mismatch.
BitVec mat_vec(const BitMat& a, const BitVec& x);

/// Inverse over GF(2) by Gauss-Jordan elimination.
/// Throws std::invalid_argument if the matrix is singular or not square.
BitMat mat_inv(const BitMat& a);

/// Solves A x = b over GF(2). Returns the lexicographically smallest solution
/// (coordinate 0 most significant) if `solvable` is set, where A has one row
/// per equation. Unknowns = A.cols().
BitVec solve_gf2_lex_min(const BitMat& a, const BitVec& b, bool* solvable);

}  // namespace cliffchar

#endif  // CLIFFCHAR_BITVEC_HPP
