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

#include <bit>
#include <stdexcept>

namespace cliffchar {

PauliElement::PauliElement(std::uint8_t phase_exponent, BitVec idx)
    : phase(phase_exponent & 3), index(idx) {
  if (idx.length() % 2 != 0) {
    throw std::invalid_argument("PauliElement index length must be even");
  }
}

PauliElement PauliElement::identity(std::size_t n) {
  return PauliElement(0, BitVec::zeros(2 * n));
}

PauliElement PauliElement::basis(std::size_t n, std::size_t j) {
  return PauliElement(0, BitVec::unit(2 * n, j));
}

std::string PauliElement::to_string() const {
  static const char* kPhase[] = {"", "i.", "-", "-i."};
  std::size_t n = num_qubits();
  std::string out = kPhase[phase];
  for (std::size_t qubit = 0; qubit < n; ++qubit) {
    bool p = index.get(qubit);
    bool q = index.get(n + qubit);
    if (qubit > 0) out += "(x)";
    out += p ? (q ? "Y" : "Z") : (q ? "X" : "1");
  }
  return out;
}

PauliElement weyl_mul(const PauliElement& a, const PauliElement& b) {
  if (a.index.length() != b.index.length()) {
    throw std::invalid_argument("weyl_mul: size mismatch");
  }
  // W_x W_y = i^{[x,y]} W_{x+y} with x+y taken in Z4 on the 0/1 lifts.
  // The Z4 sum equals (x xor y) + 2(x and y), and Weyl1 reduces that to
  // index x xor y at the cost of (-1)^{[x xor y, x and y]}.
  BitVec sum = a.index ^ b.index;
  BitVec carry = a.index & b.index;
  int phase = int(a.phase) + int(b.phase);
  phase += symp_form_z4(Z4Vec::lift(a.index), Z4Vec::lift(b.index));
  phase += 2 * symp_form_z2(sum, carry);
  return PauliElement(std::uint8_t(phase & 3), sum);
}

int basis_decomposition_phase(const BitVec& x) {
  PauliElement acc = PauliElement::identity(x.length() / 2);
  for (std::size_t j = 0; j < x.length(); ++j) {
    if (x.get(j)) {
      acc = weyl_mul(acc, PauliElement(0, BitVec::unit(x.length(), j)));
    }
  }
  if (!(acc.index == x)) {
    throw std::logic_error("basis decomposition produced wrong index");
  }
  return acc.phase;
}

PauliCharacter PauliCharacter::trivial(std::size_t n) {
  return PauliCharacter{BitVec::zeros(2 * n)};
}

PauliCharacter PauliCharacter::sigma1(std::size_t n) {
  BitVec a = BitVec::zeros(2 * n).with_bit(0, true).with_bit(n, true);
  return PauliCharacter{a};
}

int char_value(const PauliCharacter& a, const BitVec& x) {
  return BitVec::dot(a.label, x) ? -1 : 1;
}

std::string PauliCharacterTable::column_label(std::size_t col) const {
  static const char kLetter[] = {'1', 'X', 'Z', 'Y'};
  std::string word;
  for (std::size_t qubit = 0; qubit < n; ++qubit) {
    std::size_t shift = 2 * (n - 1 - qubit);
    word += kLetter[(col >> shift) & 3];
  }
  return "[" + word + "]";
}

std::string PauliCharacterTable::row_label(std::size_t row) const {
  return "psi_" + std::to_string(row + 1);
}

BitVec table_index_to_bitvec(std::size_t n, std::size_t table_index) {
  BitVec x = BitVec::zeros(2 * n);
  for (std::size_t qubit = 0; qubit < n; ++qubit) {
    std::size_t digit = (table_index >> (2 * (n - 1 - qubit))) & 3;
    // letter order I, X, Z, Y -> (p, q) bits
    bool p = digit == 2 || digit == 3;
    bool q = digit == 1 || digit == 3;
    x = x.with_bit(qubit, p).with_bit(n + qubit, q);
  }
  return x;
}

PauliCharacterTable pauli_char_table(std::size_t n, std::size_t max_n) {
  if (n == 0 || n > max_n) {
    throw std::invalid_argument("pauli_char_table: n out of supported range");
  }
  std::size_t size = std::size_t{1} << (2 * n);
  PauliCharacterTable table;
  table.n = n;
  table.values.assign(size, std::vector<int>(size, 1));
  std::vector<BitVec> vecs;
  vecs.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    vecs.push_back(table_index_to_bitvec(n, i));
  }
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      table.values[r][c] = BitVec::dot(vecs[r], vecs[c]) ? -1 : 1;
    }
  }
  return table;
}

}  // namespace cliffchar
