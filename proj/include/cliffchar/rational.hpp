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

#ifndef CLIFFCHAR_RATIONAL_HPP
#define CLIFFCHAR_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cliffchar {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always reduced with a positive denominator.
/// Everything in the character pipeline is exact: no floating point is
/// allowed anywhere near a character value.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(implicit)
  Rational(BigInt numerator, BigInt denominator);

  static Rational from_bigint(BigInt value) {
    return Rational(std::move(value), 1);
  }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator-() const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const = default;
  bool operator<(const Rational& o) const { return (num_ * o.den_) < (o.num_ * den_); }

  std::string to_string() const;  // "3" or "-1/2"

 private:
  BigInt num_;
  BigInt den_;  // > 0
};

}  // namespace cliffchar

#endif  // CLIFFCHAR_RATIONAL_HPP
