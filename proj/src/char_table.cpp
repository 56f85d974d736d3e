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

#include "cliffchar/char_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliffchar {

CharacterTable dixon_table(const GroupEnumeration& group,
                           const DixonBudget& budget, ExecPolicy policy) {
  CharacterTable table;
  table.group = &group;
  for (ClassFunction& chi : dixon_irreducibles(group, budget, policy)) {
    table.rows.push_back(CharacterRow{Provenance::kDixon, std::move(chi)});
  }
  sort_table_rows(table);
  validate_character_table(table);
  return table;
}

CharacterTable assemble_irr(Session& session, std::size_t n) {
  const GroupEnumeration& cn = session.clifford_group(n);

  CharacterTable table;
  table.group = &cn;

  // Inflations from the symplectic quotient.
  const QuotientHandle& to_sp = session.clifford_to_sp(n);
  for (const ClassFunction& psi :
       dixon_irreducibles(session.sp_group(n), session.config().dixon_budget,
                          session.config().policy)) {
    table.rows.push_back(
        CharacterRow{Provenance::kInflated, inflate_through_quotient(to_sp, psi)});
  }

  // Inductions of sigma_1' (x) psi-tilde over the inertia quotient.
  const Session::InertiaQuotient& quotient = session.inertia_quotient(n);
  const ClassFunction& sigma1p = session.sigma1_prime_character(n);
  const SubgroupHandle& inertia_sub = session.inertia_in_clifford(n);
  for (const ClassFunction& psi :
       dixon_irreducibles(*quotient.group, session.config().dixon_budget,
                          session.config().policy)) {
    ClassFunction theta =
        tensor(sigma1p, inflate_through_quotient(quotient.from_inertia, psi));
    table.rows.push_back(
        CharacterRow{Provenance::kInduced, induce_from_subgroup(inertia_sub, theta)});
  }

  sort_table_rows(table);
  validate_character_table(table);
  return table;
}

ClassFunction lift_character(Session& session, std::size_t n,
                             const ClassFunction& chi_on_clifford_n) {
  const GroupEnumeration& cn = session.clifford_group(n);
  if (chi_on_clifford_n.group != &cn) {
    throw std::invalid_argument("lift: character not on C_n of this session");
  }
  if (!is_irreducible_character(chi_on_clifford_n)) {
    throw std::invalid_argument("lift: input character is not irreducible");
  }

  // chi of phi as a class function on the affine group (the from-element
  // constructor enforces class constancy, i.e. that phi respects classes).
  const GroupEnumeration& affine = session.affine_group(n);
  const InertiaData& inertia_n = session.inertia(n);
  std::vector<Cyclotomic> phi_values(affine.order());
  for (std::size_t i = 0; i < affine.order(); ++i) {
    CliffordElement image = phi_map_packed(affine.elements()[i], inertia_n);
    phi_values[i] = chi_on_clifford_n.at_element(pack_clifford(image));
  }
  ClassFunction chi_phi = class_function_from_element_values(affine, phi_values);

  // Inflate through IN_{n+1} ->> affine, tensor with sigma_1', induce up.
  ClassFunction inflated =
      inflate_through_quotient(session.inertia_to_affine(n + 1), chi_phi);
  ClassFunction theta = tensor(inflated, session.sigma1_prime_character(n + 1));
  ClassFunction lifted =
      induce_from_subgroup(session.inertia_in_clifford(n + 1), theta);

  BigInt expected_degree =
      ((BigInt(1) << (2 * (n + 1))) - 1) * character_degree(chi_on_clifford_n);
  if (character_degree(lifted) != expected_degree) {
    throw std::logic_error("lift: degree is not (2^{2(n+1)}-1) deg chi");
  }
  if (!is_irreducible_character(lifted)) {
    throw std::logic_error("lift: induced character is not irreducible");
  }
  return lifted;
}

CharacterTable affine_table(Session& session, std::size_t n) {
  const GroupEnumeration& affine = session.affine_group(n);
  if (n == 1) {
    return dixon_table(affine, session.config().dixon_budget,
                       session.config().policy);
  }
  if (n != 2) {
    throw std::invalid_argument("affine_table: n <= 2 only");
  }

  CharacterTable table;
  table.group = &affine;

  const GroupEnumeration& sp = session.sp_group(n);
  const std::size_t dim = 2 * n;

  // (x, Gamma) -> Gamma is the quotient killing the translations.
  std::vector<std::uint32_t> to_sp_image(affine.order());
  for (std::uint32_t i = 0; i < affine.order(); ++i) {
    to_sp_image[i] = sp.index_of(affine.elements()[i] >> dim);
  }
  QuotientHandle to_sp = make_quotient_handle(affine, sp, std::move(to_sp_image));
  for (const ClassFunction& psi :
       dixon_irreducibles(sp, session.config().dixon_budget,
                          session.config().policy)) {
    table.rows.push_back(
        CharacterRow{Provenance::kInflated, inflate_through_quotient(to_sp, psi)});
  }

  // The inertia subgroup of sigma_1 inside the affine group: all
  // translations, linear parts fixing y_1.
  BitVec y1 = inertia_fixed_vector(n);
  std::vector<std::uint64_t> stab_elements;
  std::vector<std::uint64_t> stab_gammas;
  for (std::uint64_t packed : affine.elements()) {
    SympMatrix gamma = unpack_symp(packed >> dim, n);
    if (mat_vec(gamma.mat, y1) == y1) stab_elements.push_back(packed);
  }
  for (std::uint64_t packed : sp.elements()) {
    SympMatrix gamma = unpack_symp(packed, n);
    if (mat_vec(gamma.mat, y1) == y1) stab_gammas.push_back(packed);
  }
  GroupEnumeration affine_inertia = GroupEnumeration::from_elements(
      affine.ops_ptr(), stab_elements, {}, "IA" + std::to_string(n),
      session.config().policy);
  GroupEnumeration stab_sp = GroupEnumeration::from_elements(
      sp.ops_ptr(), stab_gammas, {}, "StabSp" + std::to_string(2 * n),
      session.config().policy);

  // sigma_1'' (x, Gamma) = sigma_1(x).
  PauliCharacter sigma1 = PauliCharacter::sigma1(n);
  std::vector<Cyclotomic> sigma_values(affine_inertia.order());
  for (std::size_t i = 0; i < affine_inertia.order(); ++i) {
    AffineSympElement a = unpack_affine(affine_inertia.elements()[i], n);
    sigma_values[i] = Cyclotomic(char_value(sigma1, a.translation));
  }
  ClassFunction sigma1pp =
      class_function_from_element_values(affine_inertia, sigma_values);

  std::vector<std::uint32_t> to_stab_image(affine_inertia.order());
  for (std::uint32_t i = 0; i < affine_inertia.order(); ++i) {
    to_stab_image[i] = stab_sp.index_of(affine_inertia.elements()[i] >> dim);
  }
  QuotientHandle to_stab =
      make_quotient_handle(affine_inertia, stab_sp, std::move(to_stab_image));
  SubgroupHandle inertia_sub = make_subgroup_handle(affine, affine_inertia);

  for (const ClassFunction& psi :
       dixon_irreducibles(stab_sp, session.config().dixon_budget,
                          session.config().policy)) {
    ClassFunction theta =
        tensor(sigma1pp, inflate_through_quotient(to_stab, psi));
    table.rows.push_back(
        CharacterRow{Provenance::kInduced, induce_from_subgroup(inertia_sub, theta)});
  }

  sort_table_rows(table);
  validate_character_table(table);
  return table;
}

FischerReport fischer_check(Session& session, std::size_t n) {
  FischerReport report;
  CharacterTable clifford_side = assemble_irr(session, n);
  CharacterTable affine_side = affine_table(session, n);

  const GroupEnumeration& affine = session.affine_group(n);
  const GroupEnumeration& cn = session.clifford_group(n);
  const InertiaData& inertia_n = session.inertia(n);

  // Elementwise class transport: the class of phi(s) must only depend on the
  // class of s, and the induced class map must be a size-preserving bijection.
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  report.class_bijection.assign(affine.num_classes(), kUnset);
  for (std::size_t i = 0; i < affine.order(); ++i) {
    std::uint32_t ac = affine.class_of_index(std::uint32_t(i));
    std::uint32_t cc =
        cn.class_of(pack_clifford(phi_map_packed(affine.elements()[i], inertia_n)));
    if (report.class_bijection[ac] == kUnset) {
      report.class_bijection[ac] = cc;
    } else if (report.class_bijection[ac] != cc) {
      report.notes.push_back("phi does not respect affine class " +
                             std::to_string(ac));
      return report;
    }
  }
  std::vector<bool> hit(cn.num_classes(), false);
  for (std::uint32_t ac = 0; ac < affine.num_classes(); ++ac) {
    std::uint32_t cc = report.class_bijection[ac];
    if (hit[cc]) {
      report.notes.push_back("phi class map is not injective");
      return report;
    }
    hit[cc] = true;
    if (affine.classes()[ac].size != cn.classes()[cc].size) {
      report.notes.push_back("phi image class has different size at " +
                             std::to_string(ac));
      return report;
    }
  }
  if (affine.num_classes() != cn.num_classes()) {
    report.notes.push_back("class counts differ");
    return report;
  }
  report.notes.push_back("phi respects conjugacy classes (checked on all " +
                         std::to_string(affine.order()) + " elements)");

  // Row-by-row equality of the tables under the bijection.
  std::vector<bool> used(clifford_side.rows.size(), false);
  for (const CharacterRow& arow : affine_side.rows) {
    bool matched = false;
    for (std::size_t j = 0; j < clifford_side.rows.size() && !matched; ++j) {
      if (used[j]) continue;
      bool equal = true;
      for (std::uint32_t ac = 0; ac < affine.num_classes() && equal; ++ac) {
        equal = arow.chi.values[ac] ==
                clifford_side.rows[j].chi.values[report.class_bijection[ac]];
      }
      if (equal) {
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) {
      report.notes.push_back("no Clifford row matches an affine row of degree " +
                             character_degree(arow.chi).str());
      return report;
    }
  }
  report.notes.push_back("all " + std::to_string(affine_side.rows.size()) +
                         " rows match exactly under phi");
  report.identical = true;
  return report;
}

std::vector<CorollaryCheck> corollary_suite(Session& session, std::size_t n,
                                            const CharacterTable& table) {
  std::vector<CorollaryCheck> checks;
  const GroupEnumeration& cn = session.clifford_group(n);
  if (table.group != &cn) {
    throw std::invalid_argument("corollary_suite: table is not on C_n");
  }

  // (a) degrees divide [C_n : P_n] = |Sp(2n,2)|.
  {
    CorollaryCheck check{"degree-divides-index", true, ""};
    BigInt index = sp_order(n);
    for (const CharacterRow& row : table.rows) {
      BigInt d = character_degree(row.chi);
      if (index % d != 0) {
        check.pass = false;
        check.detail += "degree " + d.str() + " does not divide " + index.str() + "; ";
      }
    }
    if (check.pass) {
      check.detail = "all degrees divide " + index.str();
    }
    checks.push_back(check);
  }

  // Pauli classes: classes whose representative has identity symplectic part.
  std::uint64_t gamma_mask = (std::uint64_t{1} << (4 * n * n)) - 1;
  std::uint64_t identity_gamma = pack_symp(SympMatrix::identity(n));
  std::vector<std::uint32_t> pauli_classes, nontrivial_pauli_classes;
  for (std::uint32_t c = 0; c < cn.num_classes(); ++c) {
    std::uint64_t rep = cn.classes()[c].representative;
    if ((rep & gamma_mask) == identity_gamma) {
      pauli_classes.push_back(c);
      if (rep != cn.identity()) nontrivial_pauli_classes.push_back(c);
    }
  }

  // (b) inflated rows constant = degree on Pauli classes; induced rows carry
  // -l there with degree = (4^n - 1) l.
  {
    CorollaryCheck check{"pauli-class-values", true, ""};
    BigInt nontrivial_count = (BigInt(1) << (2 * n)) - 1;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      const CharacterRow& row = table.rows[r];
      BigInt d = character_degree(row.chi);
      if (row.provenance == Provenance::kInflated ||
          row.provenance == Provenance::kDixon) {
        for (std::uint32_t c : pauli_classes) {
          if (row.chi.values[c] != Cyclotomic(Rational(d, 1))) {
            check.pass = false;
            check.detail += "inflated row " + std::to_string(r) +
                            " is not constant on Pauli classes; ";
          }
        }
      } else {
        Cyclotomic expected;
        bool first = true;
        for (std::uint32_t c : nontrivial_pauli_classes) {
          if (first) {
            expected = row.chi.values[c];
            first = false;
          } else if (!(row.chi.values[c] == expected)) {
            check.pass = false;
            check.detail += "induced row " + std::to_string(r) +
                            " is not constant on nontrivial Pauli classes; ";
          }
        }
        if (!expected.is_integer() || expected.rational_value().sign() >= 0) {
          check.pass = false;
          check.detail +=
              "induced row " + std::to_string(r) + " has value " +
              expected.to_string() + " on Pauli classes, expected -l; ";
          continue;
        }
        BigInt l = -expected.rational_value().numerator();
        if (d != nontrivial_count * l) {
          check.pass = false;
          check.detail += "induced row " + std::to_string(r) + ": degree " +
                          d.str() + " != (4^n-1) * " + l.str() + "; ";
        }
      }
    }
    if (check.pass) {
      check.detail = "inflated rows constant = degree; induced rows -l with degree = (4^n-1) l";
    }
    checks.push_back(check);
  }

  // (c) restriction multiplicities: trivial-only for inflated rows, uniform
  // l on the nontrivial characters for induced rows.
  {
    CorollaryCheck check{"restriction-multiplicities", true, ""};
    const GroupEnumeration& paulis = session.pauli_subgroup(n);
    const SubgroupHandle& handle = session.pauli_in_clifford(n);
    BitMat j_mat = BitMat::symplectic_gram(2 * n);

    // Index vector of each Pauli class representative (all classes are
    // singletons): the embed (I, s) is W_y with s = J y.
    std::vector<BitVec> class_index_vector(paulis.num_classes(),
                                           BitVec::zeros(2 * n));
    for (std::uint32_t c = 0; c < paulis.num_classes(); ++c) {
      CliffordElement embed =
          unpack_clifford(paulis.classes()[c].representative, n);
      class_index_vector[c] = mat_vec(j_mat, embed.signs);
    }
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      const CharacterRow& row = table.rows[r];
      ClassFunction res = restrict_to_subgroup(handle, row.chi);
      BigInt d = character_degree(row.chi);
      for (std::uint64_t label = 0; label < (std::uint64_t{1} << (2 * n));
           ++label) {
        PauliCharacter chi_a{BitVec(2 * n, label)};
        std::vector<Cyclotomic> values(paulis.num_classes());
        for (std::uint32_t c = 0; c < paulis.num_classes(); ++c) {
          values[c] = Cyclotomic(char_value(chi_a, class_index_vector[c]));
        }
        Cyclotomic mult = inner_product(res, make_class_function(paulis, values));
        bool inflated_row = row.provenance == Provenance::kInflated ||
                            row.provenance == Provenance::kDixon;
        Cyclotomic expected;
        if (inflated_row) {
          expected = label == 0 ? Cyclotomic(Rational(d, 1)) : Cyclotomic(0);
        } else {
          BigInt l = d / ((BigInt(1) << (2 * n)) - 1);
          expected = label == 0 ? Cyclotomic(0) : Cyclotomic(Rational(l, 1));
        }
        if (!(mult == expected)) {
          check.pass = false;
          check.detail += "row " + std::to_string(r) + " label " +
                          std::to_string(label) + ": multiplicity " +
                          mult.to_string() + " != " + expected.to_string() + "; ";
        }
      }
    }
    if (check.pass) {
      check.detail = "Res to the Pauli subgroup decomposes per the two-case law";
    }
    checks.push_back(check);
  }
  return checks;
}

}  // namespace cliffchar
