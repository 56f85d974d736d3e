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

#ifndef CLIFFCHAR_EXACT_MATRIX_HPP
#define CLIFFCHAR_EXACT_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cliffchar/pauli.hpp"
#include "cliffchar/rational.hpp"

namespace cliffchar {

// ---------------------------------------------------------------------------
// Dense matrix oracle over the field Q(i, sqrt2).
//
// Every matrix entry that can appear in a product of H, S, CZ, Pauli and CX
// factors lives in Q(i, sqrt2), so conjugation identities can be checked as
// exact equalities, phases included. Scalars are stored in the basis
// {1, i, sqrt2, i*sqrt2} with rational coordinates.
// ---------------------------------------------------------------------------
struct ExactScalar {
  Rational re;        // coefficient of 1
  Rational im;        // coefficient of i
  Rational re_rt2;    // coefficient of sqrt2
  Rational im_rt2;    // coefficient of i*sqrt2

  static ExactScalar zero() { return {}; }
  static ExactScalar one() { return {1, 0, 0, 0}; }
  /// i^k for k mod 4.
  static ExactScalar i_power(int k);
  /// 1/sqrt2 = sqrt2/2.
  static ExactScalar inv_sqrt2() { return {0, 0, Rational(1, 2), 0}; }

  ExactScalar operator+(const ExactScalar& o) const;
  ExactScalar operator-(const ExactScalar& o) const;
  ExactScalar operator*(const ExactScalar& o) const;
  ExactScalar conj() const;
  bool operator==(const ExactScalar& o) const = default;
  bool is_zero() const;
  std::string to_string() const;

 private:
  friend ExactScalar make_scalar(Rational, Rational, Rational, Rational);
};

class ExactMatrix {
 public:
  ExactMatrix() : dim_(0) {}
  explicit ExactMatrix(std::size_t dim);

  static ExactMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const ExactScalar& at(std::size_t r, std::size_t c) const;
  ExactScalar& at(std::size_t r, std::size_t c);

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix scaled(const ExactScalar& s) const;
  ExactMatrix dagger() const;
  /// Kronecker product, left factor on the most significant index bits
  /// (qubit 1 is the leftmost tensor factor).
  static ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

  bool operator==(const ExactMatrix& o) const = default;

 private:
  std::size_t dim_;
  std::vector<ExactScalar> entries_;
};

// Single-qubit constants and gates.
ExactMatrix pauli_x_matrix();
ExactMatrix pauli_z_matrix();
ExactMatrix hadamard_matrix();
ExactMatrix phase_gate_matrix();

/// n-qubit gates embedded at given qubit positions (0-based).
ExactMatrix gate_on_qubit(const ExactMatrix& gate2x2, std::size_t n,
                          std::size_t qubit);
ExactMatrix cz_matrix(std::size_t n, std::size_t qubit_a, std::size_t qubit_b);
ExactMatrix cx_matrix(std::size_t n, std::size_t control, std::size_t target);

/// Dense 2^n x 2^n matrix of i^phase W_x. Test oracle only; capped at n <= 4.
ExactMatrix matrix_oracle(const PauliElement& p, std::size_t max_n = 4);

/// U P U^dagger, exact.
ExactMatrix conjugate(const ExactMatrix& u, const ExactMatrix& p);

}  // namespace cliffchar

#endif  // CLIFFCHAR_EXACT_MATRIX_HPP
