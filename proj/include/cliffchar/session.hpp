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

#ifndef CLIFFCHAR_SESSION_HPP
#define CLIFFCHAR_SESSION_HPP

#include <map>
#include <memory>
#include <string>

#include "cliffchar/cache.hpp"
#include "cliffchar/class_function.hpp"
#include "cliffchar/dixon.hpp"
#include "cliffchar/inertia.hpp"

namespace cliffchar {

struct SessionConfig {
  ExecPolicy policy = ExecPolicy::kSerial;
  ClosureBudget closure_budget;
  DixonBudget dixon_budget;
  CachePolicy cache_policy = CachePolicy::kOff;
  std::string cache_dir;  // resolved through resolve_cache_dir when caching
  bool allow_large = false;
};

// ---------------------------------------------------------------------------
// Lazily built, memoized group data shared across pipeline stages. All
// returned references stay valid for the session's lifetime, so handles and
// class functions can point into them. Clifford and inertia enumerations go
// through the on-disk cache when enabled.
// ---------------------------------------------------------------------------
class Session {
 public:
  explicit Session(SessionConfig config = {});

  const SessionConfig& config() const { return config_; }

  const GroupEnumeration& clifford_group(std::size_t n);
  const GroupEnumeration& sp_group(std::size_t n);
  const GroupEnumeration& affine_group(std::size_t m);
  const InertiaData& inertia(std::size_t n);

  /// IN_n modulo the Pauli embeds, with the verified quotient handle.
  struct InertiaQuotient {
    std::unique_ptr<GroupEnumeration> group;
    QuotientHandle from_inertia;
  };
  const InertiaQuotient& inertia_quotient(std::size_t n);

  /// The verified map C_n -> Sp(2n,2) taking the symplectic part.
  const QuotientHandle& clifford_to_sp(std::size_t n);

  /// The verified map IN_n -> Sp(2(n-1),2) |x Z2^{2(n-1)}.
  const QuotientHandle& inertia_to_affine(std::size_t n);

  /// IN_n as a subgroup of C_n.
  const SubgroupHandle& inertia_in_clifford(std::size_t n);

  /// The Pauli embeds as an abelian subgroup of C_n (singleton classes).
  const GroupEnumeration& pauli_subgroup(std::size_t n);
  const SubgroupHandle& pauli_in_clifford(std::size_t n);

  /// sigma_1' as a class function on IN_n.
  const ClassFunction& sigma1_prime_character(std::size_t n);

  /// Generic memo for computed character tables (assembled, affine, Dixon),
  /// keyed by a caller-chosen stable string.
  const CharacterTable* find_table(const std::string& key) const;
  const CharacterTable& store_table(const std::string& key, CharacterTable table);

 private:
  GroupEnumeration load_or_build_clifford(std::size_t n);
  InertiaData load_or_build_inertia(std::size_t n);
  std::string cache_path(const std::string& kind, std::size_t n,
                         std::uint64_t gen_hash) const;

  SessionConfig config_;
  std::string resolved_cache_dir_;
  std::map<std::size_t, std::unique_ptr<GroupEnumeration>> cliffords_;
  std::map<std::size_t, std::unique_ptr<GroupEnumeration>> sps_;
  std::map<std::size_t, std::unique_ptr<GroupEnumeration>> affines_;
  std::map<std::size_t, std::unique_ptr<InertiaData>> inertias_;
  std::map<std::size_t, InertiaQuotient> inertia_quotients_;
  std::map<std::size_t, QuotientHandle> clifford_to_sp_;
  std::map<std::size_t, QuotientHandle> inertia_to_affine_;
  std::map<std::size_t, SubgroupHandle> inertia_in_clifford_;
  std::map<std::size_t, std::unique_ptr<GroupEnumeration>> pauli_subgroups_;
  std::map<std::size_t, SubgroupHandle> pauli_in_clifford_;
  std::map<std::size_t, std::unique_ptr<ClassFunction>> sigma1_chars_;
  std::map<std::string, std::unique_ptr<CharacterTable>> tables_;
};

}  // namespace cliffchar

#endif  // CLIFFCHAR_SESSION_HPP
