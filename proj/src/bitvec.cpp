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

#include <bit>
#include <stdexcept>

namespace cliffchar {

namespace {

std::uint64_t mask_for(std::size_t length) {
  return length >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << length) - 1);
}

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": length mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) +
                                ")");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// BitVec
// ---------------------------------------------------------------------------

BitVec::BitVec(std::size_t length, std::uint64_t bits)
    : length_(length), bits_(bits & mask_for(length)) {
  if (length == 0 || length > 64) {
    throw std::invalid_argument("BitVec length must be in [1, 64]");
  }
}

BitVec BitVec::zeros(std::size_t length) { return BitVec(length, 0); }

BitVec BitVec::unit(std::size_t length, std::size_t index) {
  BitVec v(length, 0);
  return v.with_bit(index, true);
}

bool BitVec::get(std::size_t index) const {
  if (index >= length_) throw std::out_of_range("BitVec index out of range");
  return (bits_ >> index) & 1;
}

BitVec BitVec::with_bit(std::size_t index, bool value) const {
  if (index >= length_) throw std::out_of_range("BitVec index out of range");
  std::uint64_t b = bits_;
  if (value) {
    b |= std::uint64_t{1} << index;
  } else {
    b &= ~(std::uint64_t{1} << index);
  }
  return BitVec(length_, b);
}

BitVec BitVec::operator^(const BitVec& other) const {
  require_same_length(length_, other.length_, "BitVec xor");
  return BitVec(length_, bits_ ^ other.bits_);
}

BitVec BitVec::operator&(const BitVec& other) const {
  require_same_length(length_, other.length_, "BitVec and");
  return BitVec(length_, bits_ & other.bits_);
}

int BitVec::dot(const BitVec& a, const BitVec& b) {
  require_same_length(a.length_, b.length_, "BitVec dot");
  return std::popcount(a.bits_ & b.bits_) & 1;
}

std::string BitVec::to_string() const {
  std::string out = "(";
  std::size_t half = length_ / 2;
  for (std::size_t i = 0; i < length_; ++i) {
    if (i == half && length_ % 2 == 0) out += '|';
    out += get(i) ? '1' : '0';
  }
  out += ')';
  return out;
}

// ---------------------------------------------------------------------------
// Z4Vec
// ---------------------------------------------------------------------------

Z4Vec::Z4Vec(std::vector<std::uint8_t> entries) : entries_(std::move(entries)) {
  for (auto& e : entries_) e &= 3;
}

Z4Vec Z4Vec::lift(const BitVec& v) {
  std::vector<std::uint8_t> entries(v.length());
  for (std::size_t i = 0; i < v.length(); ++i) entries[i] = v.get(i) ? 1 : 0;
  return Z4Vec(std::move(entries));
}

std::uint8_t Z4Vec::get(std::size_t index) const {
  if (index >= entries_.size()) throw std::out_of_range("Z4Vec index");
  return entries_[index];
}

void Z4Vec::set(std::size_t index, std::uint8_t value) {
  if (index >= entries_.size()) throw std::out_of_range("Z4Vec index");
  entries_[index] = value & 3;
}

BitVec Z4Vec::reduce() const {
  BitVec out = BitVec::zeros(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out = out.with_bit(i, entries_[i] & 1);
  }
  return out;
}

Z4Vec Z4Vec::operator+(const Z4Vec& other) const {
  require_same_length(entries_.size(), other.entries_.size(), "Z4Vec add");
  std::vector<std::uint8_t> entries(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries[i] = (entries_[i] + other.entries_[i]) & 3;
  }
  return Z4Vec(std::move(entries));
}

// ---------------------------------------------------------------------------
// BitMat
// ---------------------------------------------------------------------------

BitMat::BitMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), row_words_(rows, 0) {
  if (rows == 0 || cols == 0 || rows > 64 || cols > 64) {
    throw std::invalid_argument("BitMat dimensions must be in [1, 64]");
  }
}

BitMat BitMat::identity(std::size_t n) {
  BitMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMat BitMat::symplectic_gram(std::size_t two_n) {
  if (two_n % 2 != 0) {
    throw std::invalid_argument("symplectic Gram matrix needs even dimension");
  }
  std::size_t n = two_n / 2;
  BitMat j(two_n, two_n);
  for (std::size_t i = 0; i < n; ++i) {
    j.set(i, n + i, true);
    j.set(n + i, i, true);
  }
  return j;
}

bool BitMat::get(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMat index");
  return (row_words_[r] >> c) & 1;
}

void BitMat::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMat index");
  if (value) {
    row_words_[r] |= std::uint64_t{1} << c;
  } else {
    row_words_[r] &= ~(std::uint64_t{1} << c);
  }
}

std::uint64_t BitMat::row_bits(std::size_t r) const {
  if (r >= rows_) throw std::out_of_range("BitMat row");
  return row_words_[r];
}

void BitMat::set_row_bits(std::size_t r, std::uint64_t bits) {
  if (r >= rows_) throw std::out_of_range("BitMat row");
  row_words_[r] = bits & mask_for(cols_);
}

BitVec BitMat::column(std::size_t c) const {
  BitVec v = BitVec::zeros(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v = v.with_bit(r, get(r, c));
  return v;
}

void BitMat::set_column(std::size_t c, const BitVec& v) {
  require_same_length(v.length(), rows_, "BitMat set_column");
  for (std::size_t r = 0; r < rows_; ++r) set(r, c, v.get(r));
}

BitMat BitMat::transpose() const {
  BitMat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

std::string BitMat::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out += get(r, c) ? '1' : '0';
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Forms and arithmetic
// ---------------------------------------------------------------------------

int symp_form_z2(const BitVec& x, const BitVec& y) {
  require_same_length(x.length(), y.length(), "symp_form_z2");
  if (x.length() % 2 != 0) {
    throw std::invalid_argument("symplectic form needs even length");
  }
  std::size_t n = x.length() / 2;
  std::uint64_t xp = x.bits() & mask_for(n);
  std::uint64_t xq = x.bits() >> n;
  std::uint64_t yp = y.bits() & mask_for(n);
  std::uint64_t yq = y.bits() >> n;
  // p.q' - q.p' == p.q' + q.p' mod 2
  return (std::popcount(xp & yq) + std::popcount(xq & yp)) & 1;
}

int symp_form_z4(const Z4Vec& x, const Z4Vec& y) {
  if (x.length() != y.length()) {
    throw std::invalid_argument("symp_form_z4: length mismatch");
  }
  if (x.length() % 2 != 0) {
    throw std::invalid_argument("symplectic form needs even length");
  }
  std::size_t n = x.length() / 2;
  int acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += int(x.get(i)) * int(y.get(n + i));       // p.q'
    acc += 4 - (int(x.get(n + i)) * int(y.get(i))) % 4;  // -q.p'
  }
  return ((acc % 4) + 4) % 4;
}

BitMat mat_mul(const BitMat& a, const BitMat& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("mat_mul: dimension mismatch");
  }
  BitMat out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::uint64_t acc = 0;
    std::uint64_t row = a.row_bits(r);
    while (row) {
      std::size_t k = std::size_t(std::countr_zero(row));
      row &= row - 1;
      acc ^= b.row_bits(k);
    }
    out.set_row_bits(r, acc);
  }
  return out;
}

BitVec mat_vec(const BitMat& a, const BitVec& x) {
  if (a.cols() != x.length()) {
    throw std::invalid_argument("mat_vec: dimension mismatch");
  }
  std::uint64_t out = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    out |= std::uint64_t(std::popcount(a.row_bits(r) & x.bits()) & 1) << r;
  }
  return BitVec(a.rows(), out);
}

BitMat mat_inv(const BitMat& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("mat_inv: matrix not square");
  }
  std::size_t n = a.rows();
  // Gauss-Jordan on [A | I].
  std::vector<std::uint64_t> left(n), right(n);
  for (std::size_t r = 0; r < n; ++r) {
    left[r] = a.row_bits(r);
    right[r] = std::uint64_t{1} << r;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !((left[pivot] >> col) & 1)) ++pivot;
    if (pivot == n) {
      throw std::invalid_argument("mat_inv: singular matrix over GF(2)");
    }
    std::swap(left[col], left[pivot]);
    std::swap(right[col], right[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && ((left[r] >> col) & 1)) {
        left[r] ^= left[col];
        right[r] ^= right[col];
      }
    }
  }
  BitMat out(n, n);
  for (std::size_t r = 0; r < n; ++r) out.set_row_bits(r, right[r]);
  return out;
}

BitVec solve_gf2_lex_min(const BitMat& a, const BitVec& b, bool* solvable) {
  if (a.rows() != b.length()) {
    throw std::invalid_argument("solve_gf2: dimension mismatch");
  }
  std::size_t rows = a.rows(), cols = a.cols();
  // Augmented rows: low `cols` bits = coefficients, bit `cols` = rhs.
  std::vector<std::uint64_t> rws(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    rws[r] = a.row_bits(r) | (std::uint64_t(b.get(r)) << cols);
  }
  auto consistent_with_prefix = [&](std::uint64_t fixed_bits,
                                    std::size_t fixed_count) -> bool {
    // Substitutes x_0..x_{fixed_count-1} and checks solvability of the rest.
    std::vector<std::uint64_t> work = rws;
    for (auto& row : work) {
      int parity = std::popcount(row & fixed_bits &
                                 mask_for(fixed_count)) & 1;
      row &= ~mask_for(fixed_count);  // drop substituted columns
      row ^= std::uint64_t(parity) << cols;
    }
    // Gaussian elimination over remaining columns.
    std::size_t rank_row = 0;
    for (std::size_t col = fixed_count; col < cols && rank_row < rows; ++col) {
      std::size_t pivot = rank_row;
      while (pivot < rows && !((work[pivot] >> col) & 1)) ++pivot;
      if (pivot == rows) continue;
      std::swap(work[rank_row], work[pivot]);
      for (std::size_t r = 0; r < rows; ++r) {
        if (r != rank_row && ((work[r] >> col) & 1)) work[r] ^= work[rank_row];
      }
      ++rank_row;
    }
    for (const auto& row : work) {
      if ((row & mask_for(cols)) == 0 && ((row >> cols) & 1)) return false;
    }
    return true;
  };

  if (!consistent_with_prefix(0, 0)) {
    *solvable = false;
    return BitVec::zeros(cols);
  }
  // Greedy: prefer 0 at each coordinate, fall back to 1 when forced.
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < cols; ++i) {
    if (!consistent_with_prefix(x, i + 1)) {
      x |= std::uint64_t{1} << i;
    }
  }
  *solvable = true;
  return BitVec(cols, x);
}

}  // namespace cliffchar
