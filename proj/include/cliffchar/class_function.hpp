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

#ifndef CLIFFCHAR_CLASS_FUNCTION_HPP
#define CLIFFCHAR_CLASS_FUNCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "cliffchar/cyclotomic.hpp"
#include "cliffchar/group.hpp"

namespace cliffchar {

/// A class function on an enumerated group: one exact value per conjugacy
/// class, in the enumeration's class order. The group handle is by pointer;
/// callers keep enumerations alive for as long as their class functions.
struct ClassFunction {
  const GroupEnumeration* group = nullptr;
  std::vector<Cyclotomic> values;

  const Cyclotomic& at_class(std::uint32_t class_index) const {
    return values.at(class_index);
  }
  /// Value at the class of a packed element.
  const Cyclotomic& at_element(std::uint64_t packed) const {
    return values.at(group->class_of(packed));
  }
};

ClassFunction make_class_function(const GroupEnumeration& group,
                                  std::vector<Cyclotomic> values);

ClassFunction trivial_character(const GroupEnumeration& group);

/// Builds a class function from per-element data, checking class constancy.
/// Throws std::invalid_argument when any class carries two distinct values.
ClassFunction class_function_from_element_values(
    const GroupEnumeration& group, const std::vector<Cyclotomic>& per_element);

/// <chi, psi> = (1/|G|) sum over classes of size * chi * conj(psi). Exact.
Cyclotomic inner_product(const ClassFunction& chi, const ClassFunction& psi);

/// True iff <chi, chi> = 1.
bool is_irreducible_character(const ClassFunction& chi);

/// Degree = value at the identity class; must be a nonnegative integer for
/// characters (throws otherwise).
BigInt character_degree(const ClassFunction& chi);

/// (Res^G_H chi)(h) = chi(h), computed through the class fusion map.
ClassFunction restrict_to_subgroup(const SubgroupHandle& handle,
                                   const ClassFunction& chi_on_group);

/// Induced character by the centralizer-order form of the formula:
/// Ind chi(g) = |C_G(g)| * sum over H-classes D fusing into [g] of
/// chi(D) / |C_H(D)|.
ClassFunction induce_from_subgroup(const SubgroupHandle& handle,
                                   const ClassFunction& chi_on_subgroup);

/// Inflation along a verified quotient map: value at g = chi(q(g)).
ClassFunction inflate_through_quotient(const QuotientHandle& handle,
                                       const ClassFunction& chi_on_quotient);

/// Pointwise product (character of the tensor product).
ClassFunction tensor(const ClassFunction& chi, const ClassFunction& psi);

// ---------------------------------------------------------------------------
// Character tables
// ---------------------------------------------------------------------------

enum class Provenance { kDixon, kInflated, kInduced, kLifted };
std::string provenance_name(Provenance p);

struct CharacterRow {
  Provenance provenance = Provenance::kDixon;
  ClassFunction chi;
};

/// A complete irreducible character table of an enumerated group. Rows are
/// kept in a canonical order: by degree, then by values (lexicographically
/// over the enumeration's class order), then by provenance tag.
struct CharacterTable {
  const GroupEnumeration* group = nullptr;
  std::vector<CharacterRow> rows;

  std::vector<BigInt> degree_multiset() const;  // sorted ascending
};

/// Checks #rows == #classes, exact row orthonormality, exact column
/// orthogonality, and sum of squared degrees == |G|. Throws std::logic_error
/// with a diagnostic on the first violation.
void validate_character_table(const CharacterTable& table);

void sort_table_rows(CharacterTable& table);

/// A witness that two tables are identical: row_map[i] = index of the
/// `second` row equal to `first` row i under class_map, and class_map[c] =
/// the `second` class matching `first` class c (sizes agree).
struct TableCorrespondence {
  std::vector<std::uint32_t> row_map;
  std::vector<std::uint32_t> class_map;
};

/// Finds a simultaneous row/class bijection making the two tables equal
/// value-by-value (exact), with class sizes preserved. Backtracking over
/// class assignments with row-candidate filtering; character tables have
/// pairwise distinct rows and columns, so the search collapses quickly.
/// Returns std::nullopt when the tables are not identical.
std::optional<TableCorrespondence> match_tables(const CharacterTable& first,
                                                const CharacterTable& second);

}  // namespace cliffchar

#endif  // CLIFFCHAR_CLASS_FUNCTION_HPP
