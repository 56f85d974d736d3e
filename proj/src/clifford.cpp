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

#include "cliffchar/clifford.hpp"

#include <deque>
#include <stdexcept>

namespace cliffchar {

CliffordElement::CliffordElement(SympMatrix g, BitVec s)
    : gamma(std::move(g)), signs(s) {
  if (gamma.mat.rows() != signs.length()) {
    throw std::invalid_argument("CliffordElement: gamma/signs size mismatch");
  }
}

CliffordElement CliffordElement::identity(std::size_t n) {
  return CliffordElement(SympMatrix::identity(n), BitVec::zeros(2 * n));
}

PauliElement apply(const CliffordElement& g, const PauliElement& p) {
  std::size_t dim = g.signs.length();
  if (p.index.length() != dim) {
    throw std::invalid_argument("apply: size mismatch");
  }
  // Decompose W_x over basis Weyls in ascending index order, push each
  // factor through the element, and re-multiply in the same order. The two
  // phase bookkeepings differ by the sign (-1)^{f(x)} and nothing else.
  std::size_t n = dim / 2;
  PauliElement image = PauliElement::identity(n);
  for (std::size_t j = 0; j < dim; ++j) {
    if (!p.index.get(j)) continue;
    std::uint8_t sign_phase = g.signs.get(j) ? 2 : 0;
    image = weyl_mul(image, PauliElement(sign_phase, g.gamma.mat.column(j)));
  }
  int base = basis_decomposition_phase(p.index);
  int diff = ((int(image.phase) - base) % 4 + 4) % 4;
  if (diff % 2 != 0) {
    throw std::logic_error(
        "apply: odd phase on Weyl part; corrupted Clifford element");
  }
  if (!(image.index == mat_vec(g.gamma.mat, p.index))) {
    throw std::logic_error("apply: index mismatch against gamma action");
  }
  return PauliElement(std::uint8_t((p.phase + diff) & 3), image.index);
}

int sign_function(const CliffordElement& g, const BitVec& x) {
  PauliElement image = apply(g, PauliElement(0, x));
  return image.phase / 2;
}

CliffordElement mul(const CliffordElement& g, const CliffordElement& h) {
  std::size_t dim = g.signs.length();
  if (h.signs.length() != dim) {
    throw std::invalid_argument("mul: size mismatch");
  }
  SympMatrix gamma{mat_mul(g.gamma.mat, h.gamma.mat)};
  BitVec signs = BitVec::zeros(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    PauliElement image =
        apply(g, apply(h, PauliElement(0, BitVec::unit(dim, j))));
    signs = signs.with_bit(j, image.phase == 2);
  }
  return CliffordElement(gamma, signs);
}

CliffordElement inv(const CliffordElement& g) {
  std::size_t dim = g.signs.length();
  SympMatrix gamma_inv{mat_inv(g.gamma.mat)};
  // U^dagger W_{e_j} U = (-1)^{f_g(Gamma^{-1} e_j)} W_{Gamma^{-1} e_j}.
  BitVec signs = BitVec::zeros(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    BitVec y = gamma_inv.mat.column(j);
    signs = signs.with_bit(j, sign_function(g, y) == 1);
  }
  return CliffordElement(gamma_inv, signs);
}

CliffordElement pauli_embed(const BitVec& y) {
  std::size_t dim = y.length();
  BitVec signs = BitVec::zeros(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    signs = signs.with_bit(j, symp_form_z2(y, BitVec::unit(dim, j)) == 1);
  }
  return CliffordElement(SympMatrix::identity(dim / 2), signs);
}

namespace {

std::size_t p_coord(std::size_t /*n*/, std::size_t qubit) { return qubit; }
std::size_t q_coord(std::size_t n, std::size_t qubit) { return n + qubit; }

}  // namespace

CliffordElement clifford_h(std::size_t n, std::size_t qubit) {
  if (qubit >= n) throw std::invalid_argument("clifford_h: bad qubit");
  // X <-> Z with no signs (HYH^{-1} = -Y falls out of the reconstruction).
  BitMat gamma = BitMat::identity(2 * n);
  std::size_t p = p_coord(n, qubit), q = q_coord(n, qubit);
  gamma.set(p, p, false);
  gamma.set(q, q, false);
  gamma.set(p, q, true);
  gamma.set(q, p, true);
  return CliffordElement(SympMatrix::checked(gamma), BitVec::zeros(2 * n));
}

CliffordElement clifford_s(std::size_t n, std::size_t qubit) {
  if (qubit >= n) throw std::invalid_argument("clifford_s: bad qubit");
  // X -> Y (= W at index p+q), Z -> Z.
  BitMat gamma = BitMat::identity(2 * n);
  std::size_t p = p_coord(n, qubit), q = q_coord(n, qubit);
  gamma.set(p, q, true);  // column q picks up the p coordinate
  return CliffordElement(SympMatrix::checked(gamma), BitVec::zeros(2 * n));
}

CliffordElement clifford_cz(std::size_t n, std::size_t qubit_a,
                            std::size_t qubit_b) {
  if (qubit_a >= n || qubit_b >= n || qubit_a == qubit_b) {
    throw std::invalid_argument("clifford_cz: bad qubit pair");
  }
  // X_a -> X_a Z_b, X_b -> X_b Z_a, Z's fixed, all signs +.
  BitMat gamma = BitMat::identity(2 * n);
  gamma.set(p_coord(n, qubit_b), q_coord(n, qubit_a), true);
  gamma.set(p_coord(n, qubit_a), q_coord(n, qubit_b), true);
  return CliffordElement(SympMatrix::checked(gamma), BitVec::zeros(2 * n));
}

std::vector<CliffordElement> standard_generators(std::size_t n) {
  if (n == 0) throw std::invalid_argument("standard_generators: n must be >= 1");
  std::vector<CliffordElement> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(clifford_h(n, i));
  for (std::size_t i = 0; i < n; ++i) gens.push_back(clifford_s(n, i));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      gens.push_back(clifford_cz(n, a, b));
    }
  }
  for (std::size_t j = 0; j < 2 * n; ++j) {
    gens.push_back(pauli_embed(BitVec::unit(2 * n, j)));
  }
  return gens;
}

std::uint64_t pack_clifford(const CliffordElement& g) {
  std::size_t dim = g.signs.length();
  if (dim * dim + dim > 64) {
    throw std::invalid_argument("pack_clifford: n too large to pack");
  }
  std::uint64_t out = pack_symp(g.gamma);
  out |= g.signs.bits() << (dim * dim);
  return out;
}

CliffordElement unpack_clifford(std::uint64_t packed, std::size_t n) {
  std::size_t dim = 2 * n;
  std::uint64_t gamma_mask = (std::uint64_t{1} << (dim * dim)) - 1;
  SympMatrix gamma = unpack_symp(packed & gamma_mask, n);
  BitVec signs(dim, packed >> (dim * dim));
  return CliffordElement(gamma, signs);
}

CliffordOps::CliffordOps(std::size_t n) : n_(n) {
  if (n == 0 || 4 * n * n + 2 * n > 64) {
    throw std::invalid_argument("CliffordOps: n must be in [1, 3]");
  }
}

std::uint64_t CliffordOps::identity() const {
  return pack_clifford(CliffordElement::identity(n_));
}

std::uint64_t CliffordOps::multiply(std::uint64_t a, std::uint64_t b) const {
  return pack_clifford(mul(unpack_clifford(a, n_), unpack_clifford(b, n_)));
}

std::uint64_t CliffordOps::inverse(std::uint64_t a) const {
  return pack_clifford(inv(unpack_clifford(a, n_)));
}

std::string CliffordOps::describe() const {
  return "C" + std::to_string(n_);
}

GroupEnumeration enumerate_clifford(std::size_t n, const ClosureBudget& budget,
                                    ExecPolicy policy, bool allow_large) {
  if (n > 3 || (n == 3 && !allow_large)) {
    throw std::invalid_argument(
        "enumerate_clifford: n <= 2; n = 3 needs the large-run opt-in "
        "(about 9.3e7 elements, several GB)");
  }
  auto ops = std::make_shared<CliffordOps>(n);
  std::vector<std::uint64_t> gens;
  for (const CliffordElement& g : standard_generators(n)) {
    gens.push_back(pack_clifford(g));
  }
  return GroupEnumeration::generate(ops, gens, ops->describe(), budget, policy);
}

PauliCharacter act_on_character(const CliffordElement& g, const PauliCharacter& a) {
  if (g.signs.length() != a.label.length()) {
    throw std::invalid_argument("act_on_character: size mismatch");
  }
  // Gamma^{-T} = J Gamma J for symplectic Gamma over GF(2).
  BitMat j = BitMat::symplectic_gram(a.label.length());
  return PauliCharacter{mat_vec(mat_mul(mat_mul(j, g.gamma.mat), j), a.label)};
}

std::vector<BitVec> character_orbit(std::size_t n, const PauliCharacter& a) {
  std::vector<CliffordElement> gens = standard_generators(n);
  std::vector<BitVec> orbit{a.label};
  FlatMap64 seen;
  seen.insert(a.label.bits(), 0);
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const CliffordElement& g : gens) {
      BitVec image = act_on_character(g, PauliCharacter{orbit[head]}).label;
      if (seen.insert(image.bits(), std::uint32_t(orbit.size()))) {
        orbit.push_back(image);
      }
    }
  }
  return orbit;
}

CliffordElement find_conjugator(const PauliCharacter& a, const PauliCharacter& b) {
  if (a.label.is_zero() || b.label.is_zero()) {
    throw std::invalid_argument(
        "find_conjugator: the trivial character forms its own orbit");
  }
  std::size_t n = a.label.length() / 2;
  std::vector<CliffordElement> gens = standard_generators(n);

  // BFS on labels; parents give the witness word. New label = act(g, old),
  // so the witness composes as g_last * ... * g_first.
  struct Step {
    std::uint32_t parent;
    std::uint32_t gen;
  };
  std::vector<BitVec> labels{a.label};
  std::vector<Step> steps{{0, ~std::uint32_t{0}}};
  FlatMap64 seen;
  seen.insert(a.label.bits(), 0);

  std::size_t found = a.label == b.label ? 0 : ~std::size_t{0};
  for (std::size_t head = 0; head < labels.size() && found == ~std::size_t{0};
       ++head) {
    for (std::uint32_t gi = 0; gi < gens.size(); ++gi) {
      BitVec image = act_on_character(gens[gi], PauliCharacter{labels[head]}).label;
      if (seen.insert(image.bits(), std::uint32_t(labels.size()))) {
        labels.push_back(image);
        steps.push_back({std::uint32_t(head), gi});
        if (image == b.label) {
          found = labels.size() - 1;
          break;
        }
      }
    }
  }
  if (found == ~std::size_t{0}) {
    throw std::logic_error("find_conjugator: labels are not in one orbit");
  }

  CliffordElement witness = CliffordElement::identity(n);
  for (std::size_t at = found; steps[at].gen != ~std::uint32_t{0};
       at = steps[at].parent) {
    witness = mul(witness, gens[steps[at].gen]);
  }
  if (!(act_on_character(witness, a) == b)) {
    throw std::logic_error("find_conjugator: witness failed validation");
  }
  return witness;
}

}  // namespace cliffchar
