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

#include "cliffchar/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cliffchar {

std::uint32_t euler_phi(std::uint32_t m) {
  std::uint32_t result = m, rest = m;
  for (std::uint32_t p = 2; p * p <= rest; ++p) {
    if (rest % p == 0) {
      result -= result / p;
      while (rest % p == 0) rest /= p;
    }
  }
  if (rest > 1) result -= result / rest;
  return result;
}

namespace {

// Quotient of two integer polynomials known to divide exactly; divisor monic.
std::vector<BigInt> exact_poly_div(std::vector<BigInt> numerator,
                                   const std::vector<BigInt>& divisor) {
  std::size_t dn = numerator.size() - 1, dd = divisor.size() - 1;
  std::vector<BigInt> quotient(dn - dd + 1, 0);
  for (std::size_t k = dn - dd + 1; k-- > 0;) {
    BigInt c = numerator[k + dd];
    quotient[k] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) numerator[k + i] -= c * divisor[i];
  }
  for (const BigInt& c : numerator) {
    if (c != 0) throw std::logic_error("exact_poly_div: nonzero remainder");
  }
  return quotient;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(std::uint32_t m) {
  static std::map<std::uint32_t, std::vector<BigInt>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  // x^m - 1 divided by the product of Phi_d over proper divisors d | m.
  std::vector<BigInt> numerator(m + 1, 0);
  numerator[0] = -1;
  numerator[m] = 1;
  std::vector<BigInt> result = numerator;
  if (m == 1) {
    result = {BigInt(-1), BigInt(1)};
  } else {
    result = numerator;
    for (std::uint32_t d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      // Recursive dependency; compute without re-locking.
      auto dit = cache.find(d);
      if (dit == cache.end()) {
        // Fill lower levels iteratively: divisors in increasing order are
        // always present because we populate the cache bottom-up here.
        std::vector<BigInt> lower(d + 1, 0);
        lower[0] = -1;
        lower[d] = 1;
        for (std::uint32_t e = 1; e < d; ++e) {
          if (d % e != 0) continue;
          lower = exact_poly_div(std::move(lower), cache.at(e));
        }
        dit = cache.emplace(d, std::move(lower)).first;
      }
      result = exact_poly_div(std::move(result), dit->second);
    }
  }
  if (result.size() != euler_phi(m) + 1 || result.back() != 1) {
    throw std::logic_error("cyclotomic polynomial has wrong degree");
  }
  return cache.emplace(m, std::move(result)).first->second;
}

// ---------------------------------------------------------------------------
// Cyclotomic
// ---------------------------------------------------------------------------

Cyclotomic Cyclotomic::zeta_power(std::uint32_t m, std::uint64_t k) {
  if (m == 0) throw std::invalid_argument("zeta_power: conductor 0");
  std::vector<Rational> table(m, Rational(0));
  table[std::size_t(k % m)] = Rational(1);
  return from_power_table(m, std::move(table));
}

Cyclotomic Cyclotomic::from_power_table(std::uint32_t m,
                                        std::vector<Rational> table) {
  // Remainder of the table polynomial modulo Phi_m (monic).
  const std::vector<BigInt>& phi = cyclotomic_polynomial(m);
  std::size_t deg = phi.size() - 1;
  for (std::size_t k = table.size(); k-- > deg;) {
    Rational c = table[k];
    if (c.is_zero()) continue;
    table[k] = Rational(0);
    for (std::size_t i = 0; i < deg; ++i) {
      table[k - deg + i] -= c * Rational::from_bigint(phi[i]);
    }
  }
  table.resize(deg);
  Cyclotomic out(m, std::move(table));
  out.normalize();
  return out;
}

std::vector<Rational> Cyclotomic::to_power_table(
    std::uint32_t target_conductor) const {
  if (target_conductor % conductor_ != 0) {
    throw std::logic_error("to_power_table: conductor does not divide target");
  }
  std::uint32_t stride = target_conductor / conductor_;
  std::vector<Rational> table(target_conductor, Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    table[j * stride] += coeffs_[j];
  }
  return table;
}

void Cyclotomic::normalize() {
  bool higher_zero = true;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (!coeffs_[j].is_zero()) {
      higher_zero = false;
      break;
    }
  }
  if (higher_zero && conductor_ != 1) {
    Rational value = coeffs_[0];
    conductor_ = 1;
    coeffs_.assign(1, std::move(value));
  }
}

bool Cyclotomic::is_zero() const {
  for (const Rational& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Cyclotomic::is_integer() const {
  return conductor_ == 1 && coeffs_[0].is_integer();
}

const Rational& Cyclotomic::rational_value() const {
  if (conductor_ != 1) {
    throw std::logic_error("rational_value: value is not rational: " +
                           to_string());
  }
  return coeffs_[0];
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  std::uint32_t m = std::lcm(conductor_, o.conductor_);
  std::vector<Rational> table = to_power_table(m);
  std::vector<Rational> other = o.to_power_table(m);
  for (std::size_t i = 0; i < table.size(); ++i) table[i] += other[i];
  return from_power_table(m, std::move(table));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  return *this + (-o);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (Rational& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  std::uint32_t m = std::lcm(conductor_, o.conductor_);
  std::vector<Rational> a = to_power_table(m);
  std::vector<Rational> b = o.to_power_table(m);
  std::vector<Rational> prod(m, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      prod[(i + j) % m] += a[i] * b[j];  // zeta^m = 1
    }
  }
  return from_power_table(m, std::move(prod));
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
  Cyclotomic out = *this;
  for (Rational& c : out.coeffs_) c *= r;
  out.normalize();
  return out;
}

Cyclotomic Cyclotomic::conj() const {
  if (conductor_ == 1) return *this;
  std::vector<Rational> table(conductor_, Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    table[(conductor_ - j) % conductor_] += coeffs_[j];
  }
  return from_power_table(conductor_, std::move(table));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  return (*this - o).is_zero();
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ != b.conductor_) return a.conductor_ < b.conductor_ ? -1 : 1;
  for (std::size_t j = 0; j < a.coeffs_.size(); ++j) {
    if (a.coeffs_[j] == b.coeffs_[j]) continue;
    return a.coeffs_[j] < b.coeffs_[j] ? -1 : 1;
  }
  return 0;
}

std::string Cyclotomic::to_string() const {
  if (conductor_ == 1) return coeffs_[0].to_string();
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (c.is_zero()) continue;
    bool negative = c.sign() < 0;
    Rational mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string zeta = "z" + std::to_string(conductor_);
    if (j == 0) {
      out += mag.to_string();
    } else {
      if (!(mag == Rational(1))) out += mag.to_string() + "*";
      out += zeta;
      if (j > 1) out += "^" + std::to_string(j);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace cliffchar
