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

#ifndef CLIFFCHAR_DIXON_HPP
#define CLIFFCHAR_DIXON_HPP

#include <cstdint>
#include <vector>

#include "cliffchar/class_function.hpp"
#include "cliffchar/group.hpp"

namespace cliffchar {

// ---------------------------------------------------------------------------
// Dixon-Schneider character table computation.
//
// The central characters omega_i = |C_i| chi(g_i) / chi(e) are simultaneous
// eigenvectors of the class-sum multiplication matrices B_i with
// (B_i)_{jk} = #{(x,y) in C_i x C_j : xy = rep_k}. The engine finds the
// common eigenbasis over a prime field F_p with p = 1 mod exponent(G) and
// p > 2 sqrt(|G|) (the smallest such prime), reads off degrees and character
// values mod p, and lifts them to exact cyclotomic integers through
// eigenvalue-multiplicity extraction on the power maps.
// ---------------------------------------------------------------------------

struct DixonBudget {
  std::uint64_t max_elements = 20'000;
  std::uint32_t max_classes = 64;
  std::uint64_t prime_search_bound = 1'000'000;
  // Eigenspace splitting first uses the class matrices themselves, then
  // seeded random combinations; the seed is fixed so tables are reproducible
  // across runs and machines.
  int max_random_splits = 64;
  std::uint64_t seed = 0x00d1c50e5eedull;
};

/// Irreducible characters of an enumerated group, sorted by (degree, values).
/// Throws std::runtime_error on budget violations (group too large, too many
/// classes, prime search exhausted, splitting failure) and std::logic_error
/// if the computed table fails any exactness check.
std::vector<ClassFunction> dixon_irreducibles(const GroupEnumeration& group,
                                              const DixonBudget& budget = {},
                                              ExecPolicy policy = ExecPolicy::kSerial);

}  // namespace cliffchar

#endif  // CLIFFCHAR_DIXON_HPP
