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

#ifndef CLIFFCHAR_CYCLOTOMIC_HPP
#define CLIFFCHAR_CYCLOTOMIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cliffchar/rational.hpp"

namespace cliffchar {

/// Euler's totient.
std::uint32_t euler_phi(std::uint32_t m);

/// The m-th cyclotomic polynomial as monic integer coefficients, degree
/// phi(m), index = power of x. Computed by dividing x^m - 1 by the lower
/// cyclotomic polynomials; results are cached.
const std::vector<BigInt>& cyclotomic_polynomial(std::uint32_t m);

// ---------------------------------------------------------------------------
// An element of the m-th cyclotomic field Q(zeta_m), held as rational
// coefficients over the power basis zeta^0 .. zeta^{phi(m)-1}, reduced
// modulo the m-th cyclotomic polynomial. A value whose higher coefficients
// vanish is renormalized to conductor 1, so plain rationals stay cheap and
// print as plain integers. Character values are algebraic integers, but the
// intermediate arithmetic (inner products, induction sums) is honestly
// rational, hence the Rational coefficients.
// ---------------------------------------------------------------------------
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}
  Cyclotomic(std::int64_t value) : Cyclotomic(Rational(value)) {}  // NOLINT
  explicit Cyclotomic(Rational value)
      : conductor_(1), coeffs_(1, std::move(value)) {}

  /// zeta_m^k.
  static Cyclotomic zeta_power(std::uint32_t m, std::uint64_t k);

  std::uint32_t conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return conductor_ == 1; }
  bool is_integer() const;
  /// Throws std::logic_error when the value is not rational.
  const Rational& rational_value() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  /// Scales by a rational (used by the 1/|G| factors in inner products).
  Cyclotomic scaled(const Rational& r) const;

  /// Complex conjugation: zeta^j -> zeta^{m-j}.
  Cyclotomic conj() const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// Total order for canonical row sorting: by conductor, then by the
  /// coefficient vector. Not a numeric order.
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

  /// "0", "-7", "3/2", or a zeta-power sum like "2*z8 - z8^3".
  std::string to_string() const;

 private:
  Cyclotomic(std::uint32_t conductor, std::vector<Rational> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}

  /// Reduces a dense power table (exponents 0..m-1, zeta^m = 1) modulo the
  /// cyclotomic polynomial and normalizes the conductor.
  static Cyclotomic from_power_table(std::uint32_t m, std::vector<Rational> table);
  std::vector<Rational> to_power_table(std::uint32_t target_conductor) const;
  void normalize();

  std::uint32_t conductor_;
  std::vector<Rational> coeffs_;  // size phi(conductor_)
};

}  // namespace cliffchar

#endif  // CLIFFCHAR_CYCLOTOMIC_HPP
