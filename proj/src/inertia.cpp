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

#include "cliffchar/inertia.hpp"

#include <stdexcept>

namespace cliffchar {

BigInt clifford_order(std::size_t n) {
  BigInt order = BigInt(1) << (n * n + 2 * n);
  for (std::size_t j = 1; j <= n; ++j) {
    order *= (BigInt(1) << (2 * j)) - 1;
  }
  return order;
}

BitVec inertia_fixed_vector(std::size_t n) {
  return BitVec::zeros(2 * n).with_bit(0, true).with_bit(n, true);
}

bool is_in_inertia(const CliffordElement& g) {
  BitVec y1 = inertia_fixed_vector(g.num_qubits());
  return mat_vec(g.gamma.mat, y1) == y1;
}

CliffordElement inertia_m_element(std::size_t n) {
  if (n < 2) throw std::invalid_argument("inertia_m_element: needs n >= 2");
  std::size_t dim = 2 * n;
  auto coord = [n](bool q_block, std::size_t qubit) {
    return (q_block ? n : 0) + qubit;
  };
  const std::size_t p1 = coord(false, 0), p2 = coord(false, 1);
  const std::size_t q1 = coord(true, 0), q2 = coord(true, 1);

  BitMat gamma = BitMat::identity(dim);
  // Z1 -> X(x)X
  gamma.set_column(p1, BitVec::zeros(dim).with_bit(q1, true).with_bit(q2, true));
  // Z2 -> Y(x)Y
  gamma.set_column(p2, BitVec::zeros(dim)
                           .with_bit(p1, true)
                           .with_bit(p2, true)
                           .with_bit(q1, true)
                           .with_bit(q2, true));
  // X1 -> Z(x)X (with sign -1)
  gamma.set_column(q1, BitVec::zeros(dim).with_bit(p1, true).with_bit(q2, true));
  // X2 -> X2 (identity column already)

  BitVec signs = BitVec::zeros(dim).with_bit(q1, true);
  return CliffordElement(SympMatrix::checked(gamma), signs);
}

std::vector<CliffordElement> inertia_generators(std::size_t n) {
  if (n == 0) throw std::invalid_argument("inertia_generators: n must be >= 1");
  std::size_t dim = 2 * n;
  std::vector<CliffordElement> gens;
  if (n == 1) {
    gens.push_back(clifford_h(1, 0));
    gens.push_back(pauli_embed(BitVec::unit(dim, 1)));  // X embed
    gens.push_back(pauli_embed(BitVec::unit(dim, 0)));  // Z embed
    return gens;
  }
  gens.push_back(inertia_m_element(n));
  gens.push_back(clifford_h(n, 0));
  gens.push_back(pauli_embed(BitVec::unit(dim, n)));  // X_1 embed
  for (std::size_t i = 1; i < n; ++i) {
    gens.push_back(clifford_h(n, i));
    gens.push_back(clifford_s(n, i));
  }
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      gens.push_back(clifford_cz(n, a, b));
    }
  }
  return gens;
}

// ---------------------------------------------------------------------------
// Affine symplectic group
// ---------------------------------------------------------------------------

AffineSympElement AffineSympElement::identity(std::size_t m) {
  return AffineSympElement{BitVec::zeros(2 * m), SympMatrix::identity(m)};
}

AffineSympElement affine_mul(const AffineSympElement& a, const AffineSympElement& b) {
  if (a.m() != b.m()) throw std::invalid_argument("affine_mul: size mismatch");
  return AffineSympElement{a.translation ^ mat_vec(a.linear.mat, b.translation),
                           SympMatrix{mat_mul(a.linear.mat, b.linear.mat)}};
}

AffineSympElement affine_inv(const AffineSympElement& a) {
  BitMat inv_mat = mat_inv(a.linear.mat);
  return AffineSympElement{mat_vec(inv_mat, a.translation),
                           SympMatrix{inv_mat}};
}

std::uint64_t pack_affine(const AffineSympElement& a) {
  std::size_t dim = a.translation.length();
  if (dim * dim + dim > 64) {
    throw std::invalid_argument("pack_affine: m too large to pack");
  }
  return a.translation.bits() | (pack_symp(a.linear) << dim);
}

AffineSympElement unpack_affine(std::uint64_t packed, std::size_t m) {
  std::size_t dim = 2 * m;
  BitVec translation(dim, packed & ((std::uint64_t{1} << dim) - 1));
  SympMatrix linear = unpack_symp(packed >> dim, m);
  return AffineSympElement{translation, linear};
}

AffineOps::AffineOps(std::size_t m) : m_(m) {
  if (m == 0 || 4 * m * m + 2 * m > 64) {
    throw std::invalid_argument("AffineOps: m must be in [1, 3]");
  }
}

std::uint64_t AffineOps::identity() const {
  return pack_affine(AffineSympElement::identity(m_));
}

std::uint64_t AffineOps::multiply(std::uint64_t a, std::uint64_t b) const {
  return pack_affine(affine_mul(unpack_affine(a, m_), unpack_affine(b, m_)));
}

std::uint64_t AffineOps::inverse(std::uint64_t a) const {
  return pack_affine(affine_inv(unpack_affine(a, m_)));
}

std::string AffineOps::describe() const {
  return "Sp(" + std::to_string(2 * m_) + ",2)|xZ2^" + std::to_string(2 * m_);
}

GroupEnumeration enumerate_affine(std::size_t m, ExecPolicy policy) {
  auto ops = std::make_shared<AffineOps>(m);
  GroupEnumeration sp = enumerate_sp(m);
  std::vector<std::uint64_t> elements;
  elements.reserve(sp.order() << (2 * m));
  for (std::uint64_t gamma : sp.elements()) {
    SympMatrix linear = unpack_symp(gamma, m);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << (2 * m)); ++v) {
      elements.push_back(pack_affine(AffineSympElement{BitVec(2 * m, v), linear}));
    }
  }
  std::vector<std::uint64_t> gens;
  for (std::size_t j = 0; j < 2 * m; ++j) {
    gens.push_back(pack_affine(AffineSympElement{BitVec::unit(2 * m, j),
                                                 SympMatrix::identity(m)}));
  }
  for (const SympMatrix& t : transvection_generators(m)) {
    gens.push_back(pack_affine(AffineSympElement{BitVec::zeros(2 * m), t}));
  }
  return GroupEnumeration::from_elements(ops, std::move(elements), gens,
                                         ops->describe(), policy);
}

// ---------------------------------------------------------------------------
// Inertia enumeration with sigma_1' propagation
// ---------------------------------------------------------------------------

int InertiaData::sigma1_prime_at(std::uint64_t packed_element) const {
  return sigma1_prime.at(group.index_of(packed_element));
}

InertiaData enumerate_inertia(std::size_t n, const GroupEnumeration* ambient,
                              const ClosureBudget& budget, ExecPolicy policy) {
  if (n == 0) throw std::invalid_argument("enumerate_inertia: n must be >= 1");
  InertiaData data;
  data.n = n;
  data.y1 = inertia_fixed_vector(n);
  data.generator_elements = inertia_generators(n);

  std::vector<std::uint64_t> gens;
  std::vector<int> gen_values;
  std::uint64_t x1_embed = pack_clifford(pauli_embed(BitVec::unit(2 * n, n)));
  std::uint64_t z1_embed = pack_clifford(pauli_embed(BitVec::unit(2 * n, 0)));
  for (const CliffordElement& g : data.generator_elements) {
    if (!is_in_inertia(g)) {
      throw std::logic_error("inertia generator does not fix y1");
    }
    std::uint64_t packed = pack_clifford(g);
    gens.push_back(packed);
    // sigma_1' counts X_1 letters: -1 on the X_1 embed, +1 on all other
    // generators. At n = 1 the Z embed also carries -1 (sigma_1 itself).
    int value = packed == x1_embed ? -1 : 1;
    if (n == 1 && packed == z1_embed) value = -1;
    gen_values.push_back(value);
  }

  data.group = GroupEnumeration::generate(std::make_shared<CliffordOps>(n), gens,
                                          "IN" + std::to_string(n), budget, policy);

  BigInt expected = (BigInt(1) << (2 * n + 1)) * clifford_order(n - 1);
  if (BigInt(data.group.order()) != expected) {
    throw std::logic_error("inertia subgroup has wrong order: got " +
                           std::to_string(data.group.order()) + ", want " +
                           expected.str());
  }

  if (ambient != nullptr) {
    // Generated subgroup must coincide with the stabilizer set.
    std::uint64_t stabilizer_count = 0;
    for (std::uint64_t packed : ambient->elements()) {
      if (is_in_inertia(unpack_clifford(packed, n))) ++stabilizer_count;
    }
    if (stabilizer_count != data.group.order()) {
      throw std::logic_error(
          "generated inertia subgroup does not match the stabilizer set");
    }
    for (std::uint64_t packed : data.group.elements()) {
      if (!ambient->contains(packed)) {
        throw std::logic_error("inertia element missing from ambient group");
      }
    }
  }

  // Value propagation along the BFS graph. The group is already enumerated;
  // walk it again from the identity over the generator edges.
  constexpr std::int8_t kUnset = 0;
  data.sigma1_prime.assign(data.group.order(), kUnset);
  std::vector<std::uint32_t> stack;
  std::uint32_t id_index = data.group.index_of(data.group.identity());
  data.sigma1_prime[id_index] = 1;
  stack.push_back(id_index);
  while (!stack.empty()) {
    std::uint32_t at = stack.back();
    stack.pop_back();
    std::uint64_t element = data.group.elements()[at];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      std::uint64_t next = data.group.mul(element, gens[gi]);
      std::uint32_t ni = data.group.index_of(next);
      std::int8_t value = std::int8_t(data.sigma1_prime[at] * gen_values[gi]);
      if (data.sigma1_prime[ni] == kUnset) {
        data.sigma1_prime[ni] = value;
        stack.push_back(ni);
      } else if (data.sigma1_prime[ni] != value) {
        throw std::logic_error(
            "sigma_1' propagation conflict: assignment is not well-defined");
      }
    }
  }
  // Every (element, generator) edge is consistent by the loop above only for
  // edges reached while flooding; re-check them all so multiplicativity on
  // generator edges is complete (with v(e) = 1 this forces multiplicativity
  // everywhere by induction on word length).
  for (std::uint32_t at = 0; at < data.group.order(); ++at) {
    if (data.sigma1_prime[at] == kUnset) {
      throw std::logic_error("sigma_1' propagation did not reach every element");
    }
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      std::uint32_t ni =
          data.group.index_of(data.group.mul(data.group.elements()[at], gens[gi]));
      if (data.sigma1_prime[ni] != data.sigma1_prime[at] * gen_values[gi]) {
        throw std::logic_error("sigma_1' is not multiplicative on an edge");
      }
    }
  }

  if (n >= 2) {
    data.affine_image.resize(data.group.order());
    for (std::uint32_t i = 0; i < data.group.order(); ++i) {
      CliffordElement g = unpack_clifford(data.group.elements()[i], n);
      data.affine_image[i] = pack_affine(quotient_map_affine(g));
    }
  }
  return data;
}

AffineSympElement quotient_map_affine(const CliffordElement& g) {
  std::size_t n = g.num_qubits();
  if (n < 2) throw std::invalid_argument("quotient_map_affine: needs n >= 2");
  if (!is_in_inertia(g)) {
    throw std::invalid_argument("quotient_map_affine: element not in IN_n");
  }
  std::size_t dim = 2 * n, m = n - 1, mdim = 2 * m;

  // Trailing coordinates: qubits 2..n of each block.
  auto trailing = [&](const BitVec& full) {
    BitVec out = BitVec::zeros(mdim);
    for (std::size_t j = 0; j < m; ++j) {
      out = out.with_bit(j, full.get(1 + j));
      out = out.with_bit(m + j, full.get(n + 1 + j));
    }
    return out;
  };
  auto embed = [&](std::size_t j) {  // trailing coordinate j -> full coord
    return j < m ? 1 + j : n + 1 + (j - m);
  };

  // Translation from the image of X_1 = X (x) W_0, and the Z-row cross-check.
  BitVec gx = mat_vec(g.gamma.mat, BitVec::unit(dim, n));
  BitVec gz = mat_vec(g.gamma.mat, BitVec::unit(dim, 0));
  BitVec y1 = inertia_fixed_vector(n);
  if (symp_form_z2(gx, y1) != 1 || symp_form_z2(gz, y1) != 1) {
    throw std::logic_error(
        "quotient_map_affine: image lost its inertia Weyl form");
  }
  BitVec v = trailing(gx);
  if (!(trailing(gz) == v)) {
    throw std::logic_error("quotient_map_affine: X-row and Z-row disagree");
  }

  BitMat linear(mdim, mdim);
  for (std::size_t j = 0; j < mdim; ++j) {
    BitVec image = mat_vec(g.gamma.mat, BitVec::unit(dim, embed(j)));
    linear.set_column(j, trailing(image));
  }
  return AffineSympElement{v, SympMatrix::checked(linear)};
}

CliffordElement phi_section(const SympMatrix& gamma, const InertiaData& inertia) {
  std::size_t dim = gamma.mat.rows();
  if (dim != 2 * inertia.n) {
    throw std::invalid_argument("phi_section: inertia data at wrong n");
  }
  CliffordElement zero_signs(gamma, BitVec::zeros(dim));
  BitVec y1 = inertia_fixed_vector(inertia.n);
  if (!(mat_vec(gamma.mat, y1) == y1)) return zero_signs;
  if (inertia.sigma1_prime_at(pack_clifford(zero_signs)) == 1) return zero_signs;
  return mul(pauli_embed(BitVec::unit(dim, inertia.n)), zero_signs);
}

CliffordElement phi_map(const BitVec& x, const SympMatrix& gamma,
                        const InertiaData& inertia) {
  return mul(pauli_embed(x), phi_section(gamma, inertia));
}

CliffordElement phi_map_packed(std::uint64_t packed_affine,
                               const InertiaData& inertia) {
  AffineSympElement a = unpack_affine(packed_affine, inertia.n);
  return phi_map(a.translation, a.linear, inertia);
}

}  // namespace cliffchar
