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

#ifndef CLIFFCHAR_TESTS_TABLE_MATCH_HPP
#define CLIFFCHAR_TESTS_TABLE_MATCH_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "cliffchar/char_table.hpp"

namespace cliffchar::testdata {

using IntTable = std::vector<std::vector<std::int64_t>>;

/// Converts a computed table to integers; throws if any value is not a
/// rational integer (the reference tables here are all integral).
inline IntTable to_int_table(const CharacterTable& table) {
  IntTable out;
  for (const CharacterRow& row : table.rows) {
    std::vector<std::int64_t> values;
    for (const Cyclotomic& v : row.chi.values) {
      if (!v.is_integer()) {
        throw std::logic_error("non-integer table value: " + v.to_string());
      }
      values.push_back(std::int64_t(v.rational_value().numerator()));
    }
    out.push_back(std::move(values));
  }
  return out;
}

/// Equality of matrices up to simultaneous row and column permutation.
/// Character tables have pairwise distinct rows and columns, so a
/// column-assignment backtracking with row-candidate filtering terminates
/// quickly.
inline bool tables_match_up_to_permutation(const IntTable& a, const IntTable& b) {
  std::size_t rows = a.size();
  if (rows == 0 || b.size() != rows) return false;
  std::size_t cols = a[0].size();
  for (const auto& r : a) {
    if (r.size() != cols) return false;
  }
  for (const auto& r : b) {
    if (r.size() != cols) return false;
  }
  if (rows > 64 || cols > 64) throw std::invalid_argument("table too large");

  auto column = [cols](const IntTable& t, std::size_t j) {
    std::vector<std::int64_t> col;
    col.reserve(t.size());
    for (const auto& row : t) col.push_back(row[j]);
    return col;
  };
  auto signature = [](std::vector<std::int64_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  };

  // Row candidates by value-multiset.
  std::vector<std::uint64_t> row_candidates(rows, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    auto sig = signature(a[i]);
    for (std::size_t k = 0; k < rows; ++k) {
      if (sig == signature(b[k])) row_candidates[i] |= std::uint64_t{1} << k;
    }
    if (row_candidates[i] == 0) return false;
  }

  // Column candidates by value-multiset; process scarce columns first.
  std::vector<std::vector<std::size_t>> col_candidates(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    auto sig = signature(column(a, j));
    for (std::size_t l = 0; l < cols; ++l) {
      if (sig == signature(column(b, l))) col_candidates[j].push_back(l);
    }
    if (col_candidates[j].empty()) return false;
  }
  std::vector<std::size_t> col_order(cols);
  for (std::size_t j = 0; j < cols; ++j) col_order[j] = j;
  std::sort(col_order.begin(), col_order.end(), [&](std::size_t x, std::size_t y) {
    return col_candidates[x].size() < col_candidates[y].size();
  });

  std::vector<bool> col_used(cols, false);
  std::vector<std::size_t> col_map(cols, 0);

  // After all columns are mapped, every row of a must equal its unique
  // candidate row of b under the column map.
  auto rows_consistent = [&](const std::vector<std::uint64_t>& cands) {
    std::uint64_t used = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      std::uint64_t c = cands[i] & ~used;
      if (c == 0) return false;
      if ((c & (c - 1)) != 0) return false;  // must be forced by then
      used |= c;
    }
    return true;
  };

  std::function<bool(std::size_t, std::vector<std::uint64_t>)> assign =
      [&](std::size_t t, std::vector<std::uint64_t> cands) -> bool {
    if (t == cols) return rows_consistent(cands);
    std::size_t j = col_order[t];
    for (std::size_t l : col_candidates[j]) {
      if (col_used[l]) continue;
      std::vector<std::uint64_t> next = cands;
      bool viable = true;
      for (std::size_t i = 0; i < rows && viable; ++i) {
        std::uint64_t mask = 0;
        for (std::size_t k = 0; k < rows; ++k) {
          if ((next[i] >> k) & 1) {
            if (a[i][j] == b[k][l]) mask |= std::uint64_t{1} << k;
          }
        }
        next[i] = mask;
        viable = mask != 0;
      }
      if (!viable) continue;
      col_used[l] = true;
      col_map[j] = l;
      if (assign(t + 1, std::move(next))) return true;
      col_used[l] = false;
    }
    return false;
  };

  return assign(0, row_candidates);
}

}  // namespace cliffchar::testdata

#endif  // CLIFFCHAR_TESTS_TABLE_MATCH_HPP
