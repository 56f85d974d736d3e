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

#include "cliffchar/symplectic.hpp"

#include <stdexcept>

namespace cliffchar {

SympMatrix SympMatrix::checked(BitMat m) {
  if (!is_symplectic(m)) {
    throw std::invalid_argument("matrix is not symplectic over GF(2)");
  }
  return SympMatrix{std::move(m)};
}

bool is_symplectic(const BitMat& a) {
  if (a.rows() != a.cols() || a.rows() % 2 != 0) return false;
  BitMat j = BitMat::symplectic_gram(a.rows());
  return mat_mul(mat_mul(a.transpose(), j), a) == j;
}

SympMatrix transvection(const BitVec& v) {
  std::size_t dim = v.length();
  BitMat t = BitMat::identity(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    if (symp_form_z2(BitVec::unit(dim, col), v)) {
      t.set_column(col, t.column(col) ^ v);
    }
  }
  return SympMatrix{t};
}

std::vector<SympMatrix> transvection_generators(std::size_t n) {
  // T_v for every nonzero v. Over GF(2) these are involutions and generate
  // the full symplectic group; a basis alone would stay block-diagonal.
  std::vector<SympMatrix> gens;
  std::size_t dim = 2 * n;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << dim); ++bits) {
    gens.push_back(transvection(BitVec(dim, bits)));
  }
  return gens;
}

BigInt sp_order(std::size_t n) {
  BigInt order = BigInt(1) << (n * n);
  for (std::size_t j = 1; j <= n; ++j) {
    order *= (BigInt(1) << (2 * j)) - 1;
  }
  return order;
}

std::uint64_t pack_symp(const SympMatrix& m) {
  std::size_t dim = m.mat.rows();
  if (dim * dim > 64) {
    throw std::invalid_argument("pack_symp: dimension too large to pack");
  }
  std::uint64_t out = 0;
  for (std::size_t r = 0; r < dim; ++r) {
    out |= m.mat.row_bits(r) << (r * dim);
  }
  return out;
}

SympMatrix unpack_symp(std::uint64_t packed, std::size_t n) {
  std::size_t dim = 2 * n;
  BitMat m(dim, dim);
  std::uint64_t mask = (dim >= 64) ? ~std::uint64_t{0}
                                   : ((std::uint64_t{1} << dim) - 1);
  for (std::size_t r = 0; r < dim; ++r) {
    m.set_row_bits(r, (packed >> (r * dim)) & mask);
  }
  return SympMatrix{m};
}

SympOps::SympOps(std::size_t n) : n_(n) {
  if (n == 0 || 4 * n * n > 64) {
    throw std::invalid_argument("SympOps: n must be in [1, 4]");
  }
}

std::uint64_t SympOps::identity() const {
  return pack_symp(SympMatrix::identity(n_));
}

std::uint64_t SympOps::multiply(std::uint64_t a, std::uint64_t b) const {
  return pack_symp(SympMatrix{
      mat_mul(unpack_symp(a, n_).mat, unpack_symp(b, n_).mat)});
}

std::uint64_t SympOps::inverse(std::uint64_t a) const {
  return pack_symp(SympMatrix{mat_inv(unpack_symp(a, n_).mat)});
}

std::string SympOps::describe() const {
  return "Sp(" + std::to_string(2 * n_) + ",2)";
}

GroupEnumeration enumerate_sp(std::size_t n, const ClosureBudget& budget,
                              ExecPolicy policy) {
  auto ops = std::make_shared<SympOps>(n);
  std::vector<std::uint64_t> gens;
  for (const SympMatrix& t : transvection_generators(n)) {
    gens.push_back(pack_symp(t));
  }
  return GroupEnumeration::generate(ops, gens, ops->describe(), budget, policy);
}

// ---------------------------------------------------------------------------
// Mod-4 lift
// ---------------------------------------------------------------------------

Z4Vec Z4SympMatrix::column(std::size_t c) const {
  std::vector<std::uint8_t> v(dim);
  for (std::size_t r = 0; r < dim; ++r) v[r] = get(r, c);
  return Z4Vec(std::move(v));
}

BitMat Z4SympMatrix::reduce_mod2() const {
  BitMat m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) m.set(r, c, get(r, c) & 1);
  }
  return m;
}

namespace {

// J over Z4 in the (p|q) layout: [e_h, e_j] = +1 when j = h+n, -1 when
// h = j+n, else 0.
int gram_target_mod4(std::size_t h, std::size_t j, std::size_t n) {
  if (j == h + n) return 1;
  if (h == j + n) return 3;
  return 0;
}

}  // namespace

bool is_symplectic_mod4(const Z4SympMatrix& m) {
  std::size_t n = m.dim / 2;
  for (std::size_t h = 0; h < m.dim; ++h) {
    for (std::size_t j = 0; j < m.dim; ++j) {
      if (symp_form_z4(m.column(h), m.column(j)) != gram_target_mod4(h, j, n)) {
        return false;
      }
    }
  }
  return true;
}

Z4SympMatrix lift_to_z4(const SympMatrix& gamma) {
  if (!is_symplectic(gamma.mat)) {
    throw std::invalid_argument("lift_to_z4: input is not symplectic mod 2");
  }
  std::size_t dim = gamma.mat.rows();
  std::size_t n = dim / 2;

  Z4SympMatrix lifted;
  lifted.dim = dim;
  lifted.entries.assign(dim * dim, 0);

  std::vector<Z4Vec> fixed_columns;
  for (std::size_t j = 0; j < dim; ++j) {
    BitVec vj = gamma.mat.column(j);
    // Unknown correction x_j, constraints as GF(2) equations on x_j:
    //   [v_j, x_j] = 0                                  (diagonal condition)
    //   [v_h, x_j] = (J_hj - [vbar_h, lift(v_j)]) / 2    for each h < j
    BitMat system(j + 1, dim);
    BitVec rhs = BitVec::zeros(j + 1);
    {
      // Row 0: [v_j, x] as a linear form in x. [v, x] mod 2 has coefficient
      // [v, e_c] at coordinate c.
      for (std::size_t c = 0; c < dim; ++c) {
        system.set(0, c, symp_form_z2(vj, BitVec::unit(dim, c)));
      }
    }
    for (std::size_t h = 0; h < j; ++h) {
      int have = symp_form_z4(fixed_columns[h], Z4Vec::lift(vj));
      int want = gram_target_mod4(h, j, n);
      int diff = ((want - have) % 4 + 4) % 4;
      if (diff % 2 != 0) {
        throw std::logic_error(
            "lift_to_z4: parity obstruction; input not symplectic mod 2?");
      }
      BitVec vh = gamma.mat.column(h);
      for (std::size_t c = 0; c < dim; ++c) {
        system.set(h + 1, c, symp_form_z2(vh, BitVec::unit(dim, c)));
      }
      rhs = rhs.with_bit(h + 1, (diff / 2) & 1);
    }
    bool solvable = false;
    BitVec xj = solve_gf2_lex_min(system, rhs, &solvable);
    if (!solvable) {
      throw std::logic_error(
          "lift_to_z4: column system inconsistent; this contradicts the "
          "mod-4 lift construction");
    }
    Z4Vec column = Z4Vec::lift(vj);
    for (std::size_t r = 0; r < dim; ++r) {
      column.set(r, std::uint8_t(column.get(r) + 2 * xj.get(r)));
    }
    for (std::size_t r = 0; r < dim; ++r) lifted.set(r, j, column.get(r));
    fixed_columns.push_back(column);
  }

  if (!(lifted.reduce_mod2() == gamma.mat)) {
    throw std::logic_error("lift_to_z4: mod-2 reduction mismatch");
  }
  if (!is_symplectic_mod4(lifted)) {
    throw std::logic_error("lift_to_z4: output is not symplectic mod 4");
  }
  return lifted;
}

}  // namespace cliffchar
