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

#include "cliffchar/exact_matrix.hpp"

#include <stdexcept>

namespace cliffchar {

ExactScalar ExactScalar::i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0, 0, 0};
    case 1: return {0, 1, 0, 0};
    case 2: return {-1, 0, 0, 0};
    default: return {0, -1, 0, 0};
  }
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
  return {re + o.re, im + o.im, re_rt2 + o.re_rt2, im_rt2 + o.im_rt2};
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const {
  return {re - o.re, im - o.im, re_rt2 - o.re_rt2, im_rt2 - o.im_rt2};
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
  // (a + bi + c r + d ir)(a' + b'i + c'r + d'ir), r = sqrt2, r^2 = 2.
  const Rational two(2);
  ExactScalar out;
  out.re = re * o.re - im * o.im + two * (re_rt2 * o.re_rt2 - im_rt2 * o.im_rt2);
  out.im = re * o.im + im * o.re + two * (re_rt2 * o.im_rt2 + im_rt2 * o.re_rt2);
  out.re_rt2 = re * o.re_rt2 + re_rt2 * o.re - im * o.im_rt2 - im_rt2 * o.im;
  out.im_rt2 = re * o.im_rt2 + im_rt2 * o.re + im * o.re_rt2 + re_rt2 * o.im;
  return out;
}

ExactScalar ExactScalar::conj() const { return {re, -im, re_rt2, -im_rt2}; }

bool ExactScalar::is_zero() const {
  return re.is_zero() && im.is_zero() && re_rt2.is_zero() && im_rt2.is_zero();
}

std::string ExactScalar::to_string() const {
  return "(" + re.to_string() + " + " + im.to_string() + "i + " +
         re_rt2.to_string() + "r2 + " + im_rt2.to_string() + "ir2)";
}

ExactMatrix::ExactMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, ExactScalar::zero()) {
  if (dim == 0) throw std::invalid_argument("ExactMatrix: zero dimension");
}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
  ExactMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = ExactScalar::one();
  return m;
}

const ExactScalar& ExactMatrix::at(std::size_t r, std::size_t c) const {
  return entries_.at(r * dim_ + c);
}

ExactScalar& ExactMatrix::at(std::size_t r, std::size_t c) {
  return entries_.at(r * dim_ + c);
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("ExactMatrix: size mismatch");
  ExactMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = 0; k < dim_; ++k) {
      if (at(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < dim_; ++c) {
        out.at(r, c) = out.at(r, c) + at(r, k) * o.at(k, c);
      }
    }
  }
  return out;
}

ExactMatrix ExactMatrix::scaled(const ExactScalar& s) const {
  ExactMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out.at(r, c) = s * at(r, c);
  }
  return out;
}

ExactMatrix ExactMatrix::dagger() const {
  ExactMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out.at(r, c) = at(c, r).conj();
  }
  return out;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.dim() * b.dim());
  for (std::size_t ra = 0; ra < a.dim(); ++ra) {
    for (std::size_t ca = 0; ca < a.dim(); ++ca) {
      if (a.at(ra, ca).is_zero()) continue;
      for (std::size_t rb = 0; rb < b.dim(); ++rb) {
        for (std::size_t cb = 0; cb < b.dim(); ++cb) {
          out.at(ra * b.dim() + rb, ca * b.dim() + cb) =
              a.at(ra, ca) * b.at(rb, cb);
        }
      }
    }
  }
  return out;
}

ExactMatrix pauli_x_matrix() {
  ExactMatrix x(2);
  x.at(0, 1) = x.at(1, 0) = ExactScalar::one();
  return x;
}

ExactMatrix pauli_z_matrix() {
  ExactMatrix z(2);
  z.at(0, 0) = ExactScalar::one();
  z.at(1, 1) = ExactScalar{-1, 0, 0, 0};
  return z;
}

ExactMatrix hadamard_matrix() {
  ExactMatrix h(2);
  ExactScalar s = ExactScalar::inv_sqrt2();
  h.at(0, 0) = h.at(0, 1) = h.at(1, 0) = s;
  h.at(1, 1) = ExactScalar{0, 0, Rational(-1, 2), 0};
  return h;
}

ExactMatrix phase_gate_matrix() {
  ExactMatrix s(2);
  s.at(0, 0) = ExactScalar::one();
  s.at(1, 1) = ExactScalar::i_power(1);
  return s;
}

ExactMatrix gate_on_qubit(const ExactMatrix& gate2x2, std::size_t n,
                          std::size_t qubit) {
  if (gate2x2.dim() != 2 || qubit >= n) {
    throw std::invalid_argument("gate_on_qubit: bad arguments");
  }
  ExactMatrix out = ExactMatrix::identity(1);
  for (std::size_t i = 0; i < n; ++i) {
    out = ExactMatrix::kron(out, i == qubit ? gate2x2
                                            : ExactMatrix::identity(2));
  }
  return out;
}

namespace {

// Qubit 0 is the leftmost tensor factor, i.e. the most significant bit of the
// computational-basis index.
bool index_bit(std::size_t basis_index, std::size_t n, std::size_t qubit) {
  return (basis_index >> (n - 1 - qubit)) & 1;
}

}  // namespace

ExactMatrix cz_matrix(std::size_t n, std::size_t qubit_a, std::size_t qubit_b) {
  if (qubit_a == qubit_b || qubit_a >= n || qubit_b >= n) {
    throw std::invalid_argument("cz_matrix: bad qubit pair");
  }
  std::size_t dim = std::size_t{1} << n;
  ExactMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    bool minus = index_bit(i, n, qubit_a) && index_bit(i, n, qubit_b);
    out.at(i, i) = minus ? ExactScalar{-1, 0, 0, 0} : ExactScalar::one();
  }
  return out;
}

ExactMatrix cx_matrix(std::size_t n, std::size_t control, std::size_t target) {
  if (control == target || control >= n || target >= n) {
    throw std::invalid_argument("cx_matrix: bad qubit pair");
  }
  std::size_t dim = std::size_t{1} << n;
  ExactMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::size_t j = i;
    if (index_bit(i, n, control)) j ^= std::size_t{1} << (n - 1 - target);
    out.at(j, i) = ExactScalar::one();
  }
  return out;
}

ExactMatrix matrix_oracle(const PauliElement& p, std::size_t max_n) {
  std::size_t n = p.num_qubits();
  if (n == 0 || n > max_n) {
    throw std::invalid_argument("matrix_oracle: n out of supported range");
  }
  ExactMatrix out = ExactMatrix::identity(1);
  int pq = 0;
  for (std::size_t qubit = 0; qubit < n; ++qubit) {
    bool pb = p.index.get(qubit);
    bool qb = p.index.get(n + qubit);
    pq += pb && qb;
    ExactMatrix factor = ExactMatrix::identity(2);
    if (pb) factor = factor * pauli_z_matrix();
    if (qb) factor = factor * pauli_x_matrix();
    out = ExactMatrix::kron(out, factor);
  }
  // i^phase * i^{-p.q} (Z^p X^q) (x) ...
  return out.scaled(ExactScalar::i_power(int(p.phase) - pq));
}

ExactMatrix conjugate(const ExactMatrix& u, const ExactMatrix& p) {
  return u * p * u.dagger();
}

}  // namespace cliffchar
