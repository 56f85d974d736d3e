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

#include "cliffchar/class_function.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cliffchar {

namespace {

void require_same_group(const ClassFunction& a, const ClassFunction& b,
                        const char* what) {
  if (a.group != b.group) {
    throw std::invalid_argument(std::string(what) +
                                ": class functions live on different groups");
  }
}

}  // namespace

ClassFunction make_class_function(const GroupEnumeration& group,
                                  std::vector<Cyclotomic> values) {
  if (values.size() != group.num_classes()) {
    throw std::invalid_argument("class function needs one value per class");
  }
  return ClassFunction{&group, std::move(values)};
}

ClassFunction trivial_character(const GroupEnumeration& group) {
  return ClassFunction{&group, std::vector<Cyclotomic>(group.num_classes(),
                                                       Cyclotomic(1))};
}

ClassFunction class_function_from_element_values(
    const GroupEnumeration& group, const std::vector<Cyclotomic>& per_element) {
  if (per_element.size() != group.order()) {
    throw std::invalid_argument("need one value per element");
  }
  std::vector<Cyclotomic> values(group.num_classes());
  std::vector<bool> seen(group.num_classes(), false);
  for (std::size_t i = 0; i < per_element.size(); ++i) {
    std::uint32_t c = group.class_of_index(std::uint32_t(i));
    if (!seen[c]) {
      values[c] = per_element[i];
      seen[c] = true;
    } else if (values[c] != per_element[i]) {
      throw std::invalid_argument(
          "values are not constant on a conjugacy class (class " +
          std::to_string(c) + " of " + group.name() + ")");
    }
  }
  return ClassFunction{&group, std::move(values)};
}

Cyclotomic inner_product(const ClassFunction& chi, const ClassFunction& psi) {
  require_same_group(chi, psi, "inner_product");
  const GroupEnumeration& g = *chi.group;
  Cyclotomic sum;
  for (std::uint32_t c = 0; c < g.num_classes(); ++c) {
    Cyclotomic term = chi.values[c] * psi.values[c].conj();
    sum += term.scaled(Rational(BigInt(g.classes()[c].size), 1));
  }
  return sum.scaled(Rational(BigInt(1), BigInt(g.order())));
}

bool is_irreducible_character(const ClassFunction& chi) {
  return inner_product(chi, chi) == Cyclotomic(1);
}

BigInt character_degree(const ClassFunction& chi) {
  std::uint32_t id_class = chi.group->class_of(chi.group->identity());
  const Cyclotomic& value = chi.values.at(id_class);
  if (!value.is_integer() || value.rational_value().sign() < 0) {
    throw std::logic_error("character degree is not a nonnegative integer: " +
                           value.to_string());
  }
  return value.rational_value().numerator();
}

ClassFunction restrict_to_subgroup(const SubgroupHandle& handle,
                                   const ClassFunction& chi_on_group) {
  if (chi_on_group.group != handle.group) {
    throw std::invalid_argument("restrict: class function not on the parent");
  }
  std::vector<Cyclotomic> values(handle.subgroup->num_classes());
  for (std::uint32_t c = 0; c < values.size(); ++c) {
    values[c] = chi_on_group.values.at(handle.class_fusion[c]);
  }
  return ClassFunction{handle.subgroup, std::move(values)};
}

ClassFunction induce_from_subgroup(const SubgroupHandle& handle,
                                   const ClassFunction& chi_on_subgroup) {
  if (chi_on_subgroup.group != handle.subgroup) {
    throw std::invalid_argument("induce: class function not on the subgroup");
  }
  const GroupEnumeration& g = *handle.group;
  const GroupEnumeration& h = *handle.subgroup;
  std::vector<Cyclotomic> values(g.num_classes(), Cyclotomic(0));
  for (std::uint32_t gc = 0; gc < g.num_classes(); ++gc) {
    Cyclotomic sum;
    for (std::uint32_t hc = 0; hc < h.num_classes(); ++hc) {
      if (handle.class_fusion[hc] != gc) continue;
      Rational inv_centralizer(BigInt(1),
                               BigInt(h.classes()[hc].centralizer_order));
      sum += chi_on_subgroup.values[hc].scaled(inv_centralizer);
    }
    values[gc] =
        sum.scaled(Rational(BigInt(g.classes()[gc].centralizer_order), 1));
  }
  return ClassFunction{&g, std::move(values)};
}

ClassFunction inflate_through_quotient(const QuotientHandle& handle,
                                       const ClassFunction& chi_on_quotient) {
  if (chi_on_quotient.group != handle.quotient) {
    throw std::invalid_argument("inflate: class function not on the quotient");
  }
  std::vector<Cyclotomic> values(handle.group->num_classes());
  for (std::uint32_t c = 0; c < values.size(); ++c) {
    values[c] = chi_on_quotient.values.at(handle.class_image[c]);
  }
  return ClassFunction{handle.group, std::move(values)};
}

ClassFunction tensor(const ClassFunction& chi, const ClassFunction& psi) {
  require_same_group(chi, psi, "tensor");
  std::vector<Cyclotomic> values(chi.values.size());
  for (std::size_t c = 0; c < values.size(); ++c) {
    values[c] = chi.values[c] * psi.values[c];
  }
  return ClassFunction{chi.group, std::move(values)};
}

// ---------------------------------------------------------------------------
// Character tables
// ---------------------------------------------------------------------------

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kDixon: return "dixon";
    case Provenance::kInflated: return "inflated";
    case Provenance::kInduced: return "induced";
    case Provenance::kLifted: return "lifted";
  }
  return "?";
}

std::vector<BigInt> CharacterTable::degree_multiset() const {
  std::vector<BigInt> degrees;
  for (const CharacterRow& row : rows) {
    degrees.push_back(character_degree(row.chi));
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

void validate_character_table(const CharacterTable& table) {
  const GroupEnumeration& g = *table.group;
  if (table.rows.size() != g.num_classes()) {
    throw std::logic_error("table of " + g.name() + " has " +
                           std::to_string(table.rows.size()) + " rows for " +
                           std::to_string(g.num_classes()) + " classes");
  }
  BigInt degree_square_sum = 0;
  for (const CharacterRow& row : table.rows) {
    BigInt d = character_degree(row.chi);
    degree_square_sum += d * d;
  }
  if (degree_square_sum != BigInt(g.order())) {
    throw std::logic_error("sum of squared degrees is " +
                           degree_square_sum.str() + ", not |" + g.name() +
                           "| = " + std::to_string(g.order()));
  }
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    for (std::size_t j = i; j < table.rows.size(); ++j) {
      Cyclotomic ip = inner_product(table.rows[i].chi, table.rows[j].chi);
      if (ip != Cyclotomic(i == j ? 1 : 0)) {
        throw std::logic_error("rows " + std::to_string(i) + "," +
                               std::to_string(j) + " of " + g.name() +
                               " are not orthonormal: <.,.> = " + ip.to_string());
      }
    }
  }
  for (std::uint32_t c = 0; c < g.num_classes(); ++c) {
    for (std::uint32_t c2 = c; c2 < g.num_classes(); ++c2) {
      Cyclotomic sum;
      for (const CharacterRow& row : table.rows) {
        sum += row.chi.values[c] * row.chi.values[c2].conj();
      }
      Cyclotomic expected =
          c == c2
              ? Cyclotomic(Rational(BigInt(g.classes()[c].centralizer_order), 1))
              : Cyclotomic(0);
      if (sum != expected) {
        throw std::logic_error("columns " + std::to_string(c) + "," +
                               std::to_string(c2) + " of " + g.name() +
                               " fail orthogonality");
      }
    }
  }
}

void sort_table_rows(CharacterTable& table) {
  std::sort(table.rows.begin(), table.rows.end(),
            [](const CharacterRow& a, const CharacterRow& b) {
              BigInt da = character_degree(a.chi), db = character_degree(b.chi);
              if (da != db) return da < db;
              for (std::size_t c = 0; c < a.chi.values.size(); ++c) {
                int cmp = Cyclotomic::compare(a.chi.values[c], b.chi.values[c]);
                if (cmp != 0) return cmp < 0;
              }
              return int(a.provenance) < int(b.provenance);
            });
}

namespace {

// Canonical sort keys so multiset comparisons are cheap.
std::vector<std::string> sorted_value_keys(const std::vector<Cyclotomic>& values) {
  std::vector<std::string> keys;
  keys.reserve(values.size());
  for (const Cyclotomic& v : values) keys.push_back(v.to_string());
  std::sort(keys.begin(), keys.end());
  return keys;
}

bool match_classes_recursive(
    const CharacterTable& a, const CharacterTable& b,
    const std::vector<std::vector<std::uint32_t>>& class_candidates,
    const std::vector<std::uint32_t>& class_order, std::size_t at,
    std::vector<bool>& used, std::vector<std::uint32_t>& class_map,
    std::vector<std::uint64_t>& row_candidates) {
  const std::size_t rows = a.rows.size();
  if (at == class_order.size()) {
    // All classes mapped; every a-row must now be forced onto a distinct
    // b-row.
    std::uint64_t taken = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      std::uint64_t mask = row_candidates[i] & ~taken;
      if (mask == 0 || (mask & (mask - 1)) != 0) return false;
      taken |= mask;
    }
    return true;
  }
  std::uint32_t c = class_order[at];
  for (std::uint32_t target : class_candidates[c]) {
    if (used[target]) continue;
    std::vector<std::uint64_t> next = row_candidates;
    bool viable = true;
    for (std::size_t i = 0; i < rows && viable; ++i) {
      std::uint64_t mask = 0;
      for (std::size_t k = 0; k < rows; ++k) {
        if (((next[i] >> k) & 1) &&
            a.rows[i].chi.values[c] == b.rows[k].chi.values[target]) {
          mask |= std::uint64_t{1} << k;
        }
      }
      next[i] = mask;
      viable = mask != 0;
    }
    if (!viable) continue;
    used[target] = true;
    class_map[c] = target;
    if (match_classes_recursive(a, b, class_candidates, class_order, at + 1,
                                used, class_map, next)) {
      row_candidates = std::move(next);
      return true;
    }
    used[target] = false;
  }
  return false;
}

}  // namespace

std::optional<TableCorrespondence> match_tables(const CharacterTable& first,
                                                const CharacterTable& second) {
  const std::size_t rows = first.rows.size();
  const std::size_t classes = first.group->num_classes();
  if (rows != second.rows.size() ||
      classes != second.group->num_classes() ||
      first.group->order() != second.group->order() || rows > 64) {
    return std::nullopt;
  }

  // Class candidates: equal size and equal column value-multiset.
  std::vector<std::vector<std::uint32_t>> class_candidates(classes);
  for (std::uint32_t c = 0; c < classes; ++c) {
    std::vector<Cyclotomic> col_a;
    for (const CharacterRow& row : first.rows) col_a.push_back(row.chi.values[c]);
    auto key_a = sorted_value_keys(col_a);
    for (std::uint32_t t = 0; t < classes; ++t) {
      if (first.group->classes()[c].size != second.group->classes()[t].size) {
        continue;
      }
      std::vector<Cyclotomic> col_b;
      for (const CharacterRow& row : second.rows) col_b.push_back(row.chi.values[t]);
      if (key_a == sorted_value_keys(col_b)) class_candidates[c].push_back(t);
    }
    if (class_candidates[c].empty()) return std::nullopt;
  }

  std::vector<std::uint64_t> row_candidates(rows, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    auto key_a = sorted_value_keys(first.rows[i].chi.values);
    for (std::size_t k = 0; k < rows; ++k) {
      if (key_a == sorted_value_keys(second.rows[k].chi.values)) {
        row_candidates[i] |= std::uint64_t{1} << k;
      }
    }
    if (row_candidates[i] == 0) return std::nullopt;
  }

  std::vector<std::uint32_t> class_order(classes);
  for (std::uint32_t c = 0; c < classes; ++c) class_order[c] = c;
  std::sort(class_order.begin(), class_order.end(),
            [&](std::uint32_t x, std::uint32_t y) {
              return class_candidates[x].size() < class_candidates[y].size();
            });

  std::vector<bool> used(classes, false);
  TableCorrespondence out;
  out.class_map.assign(classes, 0);
  if (!match_classes_recursive(first, second, class_candidates, class_order, 0,
                               used, out.class_map, row_candidates)) {
    return std::nullopt;
  }
  out.row_map.assign(rows, 0);
  std::uint64_t taken = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    std::uint64_t mask = row_candidates[i] & ~taken;
    std::uint32_t k = std::uint32_t(std::countr_zero(mask));
    out.row_map[i] = k;
    taken |= std::uint64_t{1} << k;
  }
  // Final exactness audit of the witness.
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::uint32_t c = 0; c < classes; ++c) {
      if (!(first.rows[i].chi.values[c] ==
            second.rows[out.row_map[i]].chi.values[out.class_map[c]])) {
        throw std::logic_error("match_tables: witness failed the audit");
      }
    }
  }
  return out;
}

}  // namespace cliffchar
