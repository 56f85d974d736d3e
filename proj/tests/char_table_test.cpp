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

#include <random>

#include "gtest/gtest.h"
#include "paper_tables.hpp"
#include "table_match.hpp"

namespace cliffchar {
namespace {

Session& shared_session() {
  static Session session;
  return session;
}

// ---------------------------------------------------------------------------
// Class function operations
// ---------------------------------------------------------------------------

TEST(ClassFunctionOps, InnerProductOnTrivialCharacter) {
  Session& s = shared_session();
  const GroupEnumeration& sp = s.sp_group(1);
  ClassFunction triv = trivial_character(sp);
  EXPECT_EQ(inner_product(triv, triv), Cyclotomic(1));
  EXPECT_TRUE(is_irreducible_character(triv));
}

TEST(ClassFunctionOps, Sp22PrintedRowsAreOrthonormal) {
  Session& s = shared_session();
  const GroupEnumeration& sp = s.sp_group(1);
  // Classes of Sp(2,2) ~ S3: identity, 3 transvections (order 2), 2 of
  // order 3; the enumeration orders them by (size, rep).
  ASSERT_EQ(sp.num_classes(), 3u);
  std::vector<std::uint32_t> order_of_class;
  for (const auto& c : sp.classes()) order_of_class.push_back(c.element_order);
  auto row = [&](std::int64_t at_id, std::int64_t at_invol, std::int64_t at_ord3) {
    std::vector<Cyclotomic> values(3);
    for (std::uint32_t c = 0; c < 3; ++c) {
      std::int64_t v = order_of_class[c] == 1   ? at_id
                       : order_of_class[c] == 2 ? at_invol
                                                : at_ord3;
      values[c] = Cyclotomic(v);
    }
    return make_class_function(sp, values);
  };
  ClassFunction theta1 = row(1, 1, 1), theta2 = row(1, -1, 1), theta3 = row(2, 0, -1);
  EXPECT_EQ(inner_product(theta1, theta2), Cyclotomic(0));
  EXPECT_EQ(inner_product(theta2, theta3), Cyclotomic(0));
  EXPECT_EQ(inner_product(theta3, theta3), Cyclotomic(1));
}

TEST(ClassFunctionOps, TensorAndTrivial) {
  Session& s = shared_session();
  CharacterTable c1 = assemble_irr(s, 1);
  ClassFunction triv = trivial_character(s.clifford_group(1));
  for (const CharacterRow& row : c1.rows) {
    ClassFunction t = tensor(row.chi, triv);
    EXPECT_EQ(inner_product(t, row.chi), Cyclotomic(1));
  }
}

TEST(ClassFunctionOps, FrobeniusReciprocity) {
  Session& s = shared_session();
  const SubgroupHandle& handle = s.inertia_in_clifford(2);
  CharacterTable c2 = assemble_irr(s, 2);
  const ClassFunction& sigma1p = s.sigma1_prime_character(2);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 8; ++trial) {
    const ClassFunction& chi = c2.rows[rng() % c2.rows.size()].chi;
    // <Ind sigma1', chi>_G = <sigma1', Res chi>_H
    EXPECT_EQ(inner_product(induce_from_subgroup(handle, sigma1p), chi),
              inner_product(sigma1p, restrict_to_subgroup(handle, chi)));
  }
}

TEST(ClassFunctionOps, InductionDegreeLaw) {
  Session& s = shared_session();
  const SubgroupHandle& handle = s.inertia_in_clifford(2);
  ClassFunction ind = induce_from_subgroup(handle, trivial_character(s.inertia(2).group));
  EXPECT_EQ(character_degree(ind), BigInt(15));  // the index [C_2 : IN_2]
}

TEST(ClassFunctionOps, InflationKernelLaw) {
  Session& s = shared_session();
  const QuotientHandle& to_sp = s.clifford_to_sp(1);
  for (const ClassFunction& psi : dixon_irreducibles(s.sp_group(1))) {
    ClassFunction inflated = inflate_through_quotient(to_sp, psi);
    BigInt d = character_degree(inflated);
    EXPECT_EQ(d, character_degree(psi));
    // Constant = degree on the kernel (the Pauli embeds).
    for (std::uint64_t y = 0; y < 4; ++y) {
      EXPECT_EQ(inflated.at_element(pack_clifford(pauli_embed(BitVec(2, y)))),
                Cyclotomic(Rational(d, 1)));
    }
  }
}

TEST(ClassFunctionOps, ClassConstancyViolationThrows) {
  Session& s = shared_session();
  const GroupEnumeration& sp = s.sp_group(1);
  std::vector<Cyclotomic> values(sp.order(), Cyclotomic(0));
  values[0] = Cyclotomic(1);  // breaks constancy on some class
  EXPECT_THROW(class_function_from_element_values(sp, values),
               std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Dixon engine
// ---------------------------------------------------------------------------

TEST(Dixon, OrderTwoGroup) {
  // Z2 as the one-qubit Pauli subgroup generated by the X embed.
  auto ops = std::make_shared<CliffordOps>(1);
  GroupEnumeration z2 = GroupEnumeration::generate(
      ops, {pack_clifford(pauli_embed(BitVec(2, 0b10)))}, "Z2");
  ASSERT_EQ(z2.order(), 2u);
  CharacterTable table = dixon_table(z2);
  testdata::IntTable expected = {{1, 1}, {1, -1}};
  EXPECT_TRUE(testdata::tables_match_up_to_permutation(
      testdata::to_int_table(table), expected));
}

TEST(Dixon, Sp22MatchesPrintedTable) {
  Session& s = shared_session();
  CharacterTable table = dixon_table(s.sp_group(1));
  EXPECT_TRUE(testdata::tables_match_up_to_permutation(
      testdata::to_int_table(table), testdata::kSp22Table));
}

TEST(Dixon, Sp42DegreesMatchPaper) {
  Session& s = shared_session();
  CharacterTable table = dixon_table(s.sp_group(2));
  std::vector<BigInt> expected{1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16};
  EXPECT_EQ(table.degree_multiset(), expected);
}

TEST(Dixon, CyclicGroupGetsComplexValues) {
  // The phase gate's class in C_1 has order 4; <S> is cyclic of order 4 and
  // its table involves exact fourth roots of unity.
  auto ops = std::make_shared<CliffordOps>(1);
  GroupEnumeration z4 = GroupEnumeration::generate(
      ops, {pack_clifford(clifford_s(1, 0))}, "Z4");
  ASSERT_EQ(z4.order(), 4u);
  CharacterTable table = dixon_table(z4);
  ASSERT_EQ(table.rows.size(), 4u);
  int complex_rows = 0;
  for (const CharacterRow& row : table.rows) {
    for (const Cyclotomic& v : row.chi.values) {
      if (!v.is_rational()) {
        ++complex_rows;
        break;
      }
    }
  }
  EXPECT_EQ(complex_rows, 2);  // the two faithful characters take value +-i
}

TEST(Dixon, BudgetErrors) {
  Session& s = shared_session();
  DixonBudget tiny;
  tiny.max_elements = 10;
  EXPECT_THROW(dixon_irreducibles(s.sp_group(2), tiny), std::runtime_error);
}

// ---------------------------------------------------------------------------
// Assembled tables
// ---------------------------------------------------------------------------

TEST(AssembleIrr, OneQubitMatchesPrintedTable) {
  Session& s = shared_session();
  CharacterTable table = assemble_irr(s, 1);
  ASSERT_EQ(table.rows.size(), 5u);
  EXPECT_TRUE(testdata::tables_match_up_to_permutation(
      testdata::to_int_table(table), testdata::kCliffordOneTable));
  // Provenance split: 3 inflated, 2 induced.
  int inflated = 0, induced = 0;
  for (const CharacterRow& row : table.rows) {
    inflated += row.provenance == Provenance::kInflated;
    induced += row.provenance == Provenance::kInduced;
  }
  EXPECT_EQ(inflated, 3);
  EXPECT_EQ(induced, 2);
}

TEST(AssembleIrr, OneQubitMatchesDixonDirectly) {
  Session& s = shared_session();
  CharacterTable assembled = assemble_irr(s, 1);
  CharacterTable direct = dixon_table(s.clifford_group(1));
  EXPECT_TRUE(testdata::tables_match_up_to_permutation(
      testdata::to_int_table(assembled), testdata::to_int_table(direct)));
}

TEST(AssembleIrr, InertiaQuotientMatchesPrintedProductTable) {
  Session& s = shared_session();
  const Session::InertiaQuotient& q = s.inertia_quotient(2);
  ASSERT_EQ(q.group->order(), 48u);
  CharacterTable table = dixon_table(*q.group);
  EXPECT_TRUE(testdata::tables_match_up_to_permutation(
      testdata::to_int_table(table), testdata::kInertiaQuotientTable));
}

TEST(AssembleIrr, TwoQubitMatchesPrintedTable) {
  Session& s = shared_session();
  CharacterTable table = assemble_irr(s, 2);
  ASSERT_EQ(table.rows.size(), 21u);
  std::vector<BigInt> expected_degrees{1,  1,  5,  5,  5,  5,  9,  9,  10, 10, 15,
                                       15, 15, 15, 16, 30, 30, 45, 45, 45, 45};
  EXPECT_EQ(table.degree_multiset(), expected_degrees);
  EXPECT_TRUE(testdata::tables_match_up_to_permutation(
      testdata::to_int_table(table), testdata::kCliffordTwoTable));
}

TEST(AssembleIrr, TwoQubitDixonCrossValidation) {
  Session& s = shared_session();
  CharacterTable assembled = assemble_irr(s, 2);
  CharacterTable direct = dixon_table(s.clifford_group(2));
  EXPECT_TRUE(testdata::tables_match_up_to_permutation(
      testdata::to_int_table(assembled), testdata::to_int_table(direct)));
}

// ---------------------------------------------------------------------------
// Lift, Fischer, corollaries
// ---------------------------------------------------------------------------

TEST(Lift, AllFiveOneQubitCharacters) {
  Session& s = shared_session();
  CharacterTable c1 = assemble_irr(s, 1);
  CharacterTable c2 = assemble_irr(s, 2);
  std::vector<BigInt> lifted_degrees;
  std::vector<ClassFunction> lifted;
  for (const CharacterRow& row : c1.rows) {
    ClassFunction chi = lift_character(s, 1, row.chi);
    EXPECT_EQ(inner_product(chi, chi), Cyclotomic(1));
    lifted_degrees.push_back(character_degree(chi));
    lifted.push_back(chi);
  }
  std::sort(lifted_degrees.begin(), lifted_degrees.end());
  EXPECT_EQ(lifted_degrees, (std::vector<BigInt>{15, 15, 30, 45, 45}));
  // Each lift appears among the assembled C_2 rows; all five are distinct.
  for (const ClassFunction& chi : lifted) {
    int matches = 0;
    for (const CharacterRow& row : c2.rows) {
      if (inner_product(chi, row.chi) == Cyclotomic(1)) ++matches;
    }
    EXPECT_EQ(matches, 1);
  }
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    for (std::size_t j = i + 1; j < lifted.size(); ++j) {
      EXPECT_EQ(inner_product(lifted[i], lifted[j]), Cyclotomic(0));
    }
  }
}

TEST(Lift, TrivialCharacterGivesPublishedRow) {
  Session& s = shared_session();
  ClassFunction lifted = lift_character(s, 1, trivial_character(s.clifford_group(1)));
  // Value multiset (with class sizes) must equal the published row's.
  const GroupEnumeration& c2 = s.clifford_group(2);
  std::multiset<std::pair<std::int64_t, std::uint64_t>> computed, published;
  for (std::uint32_t c = 0; c < c2.num_classes(); ++c) {
    computed.insert({std::int64_t(lifted.values[c].rational_value().numerator()),
                     c2.classes()[c].size});
  }
  // Published class sizes are recovered through column orthogonality of the
  // full printed table: |C(g)| = sum of |chi(g)|^2 over rows.
  for (std::size_t col = 0; col < 21; ++col) {
    std::int64_t centralizer = 0;
    for (const auto& row : testdata::kCliffordTwoTable) {
      centralizer += row[col] * row[col];
    }
    published.insert({testdata::kLiftOfTrivialRow[col],
                      std::uint64_t(11520 / centralizer)});
  }
  EXPECT_EQ(computed, published);
  // Including the -7 value on a Pauli-containing class.
  bool has_minus_seven = false;
  for (const Cyclotomic& v : lifted.values) {
    has_minus_seven |= v == Cyclotomic(-7);
  }
  EXPECT_TRUE(has_minus_seven);
}

TEST(Lift, RejectsReducibleInput) {
  Session& s = shared_session();
  CharacterTable c1 = assemble_irr(s, 1);
  ClassFunction sum = c1.rows[0].chi;
  for (std::size_t c = 0; c < sum.values.size(); ++c) {
    sum.values[c] += c1.rows[1].chi.values[c];
  }
  EXPECT_THROW(lift_character(s, 1, sum), std::invalid_argument);
}

TEST(Fischer, OneQubitIdentity) {
  Session& s = shared_session();
  FischerReport report = fischer_check(s, 1);
  EXPECT_TRUE(report.identical);
}

TEST(Fischer, TwoQubitIdentity) {
  Session& s = shared_session();
  FischerReport report = fischer_check(s, 2);
  EXPECT_TRUE(report.identical) << (report.notes.empty() ? "" : report.notes.back());
}

TEST(Corollaries, OneAndTwoQubitSuites) {
  Session& s = shared_session();
  for (std::size_t n = 1; n <= 2; ++n) {
    CharacterTable table = assemble_irr(s, n);
    for (const CorollaryCheck& check : corollary_suite(s, n, table)) {
      EXPECT_TRUE(check.pass) << check.name << ": " << check.detail;
    }
  }
}

TEST(Corollaries, DegreeFifteenRowHasInertiaIndexOne) {
  // The l-bookkeeping on a specific row: degree 15 = (4^2 - 1) * 1, so the
  // value on the nontrivial Pauli class is -1.
  Session& s = shared_session();
  CharacterTable table = assemble_irr(s, 2);
  const GroupEnumeration& c2 = s.clifford_group(2);
  std::uint32_t pauli_class =
      c2.class_of(pack_clifford(pauli_embed(BitVec(4, 0b0001))));
  for (const CharacterRow& row : table.rows) {
    if (character_degree(row.chi) == BigInt(15)) {
      EXPECT_EQ(row.chi.values[pauli_class], Cyclotomic(-1));
    }
    if (character_degree(row.chi) == BigInt(30)) {
      EXPECT_EQ(row.chi.values[pauli_class], Cyclotomic(-2));
    }
  }
}

}  // namespace
}  // namespace cliffchar
