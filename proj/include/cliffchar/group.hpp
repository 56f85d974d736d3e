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

#ifndef CLIFFCHAR_GROUP_HPP
#define CLIFFCHAR_GROUP_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cliffchar/flat_map.hpp"

namespace cliffchar {

// ---------------------------------------------------------------------------
// A finite group materialized as packed 64-bit elements.
//
// Group arithmetic is supplied by a GroupOps implementation; enumeration,
// conjugacy classes and everything downstream (character theory) only ever
// see packed values. The enumeration kernels come in two variants selected
// by ExecPolicy: a serial reference and an OpenMP one. Their results are
// bit-identical; tests assert it and bench/ compares their speed.
// ---------------------------------------------------------------------------

enum class ExecPolicy { kSerial, kParallel };

class GroupOps {
 public:
  virtual ~GroupOps() = default;
  virtual std::uint64_t identity() const = 0;
  virtual std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const = 0;
  virtual std::uint64_t inverse(std::uint64_t a) const = 0;
  /// Stable description used in cache keys and error messages.
  virtual std::string describe() const = 0;
};

struct ClosureBudget {
  std::uint64_t max_elements = 200'000'000;  // guards accidental huge closures
};

/// BFS closure of the generated subgroup, sorted ascending.
/// Throws std::runtime_error when the budget is exceeded.
std::vector<std::uint64_t> bfs_closure(const GroupOps& ops,
                                       const std::vector<std::uint64_t>& gens,
                                       const ClosureBudget& budget,
                                       ExecPolicy policy);

struct ConjugacyClass {
  std::uint64_t representative = 0;  // minimum packed value in the class
  std::uint64_t size = 0;
  std::uint32_t element_order = 0;
  std::uint64_t centralizer_order = 0;
};

class GroupEnumeration {
 public:
  /// Empty enumeration; usable only as a placeholder to assign into.
  GroupEnumeration() = default;

  /// Enumerates <gens> by BFS and computes conjugacy classes.
  static GroupEnumeration generate(std::shared_ptr<const GroupOps> ops,
                                   std::vector<std::uint64_t> gens,
                                   std::string name,
                                   const ClosureBudget& budget = {},
                                   ExecPolicy policy = ExecPolicy::kSerial);

  /// Wraps an explicit element set (must be closed under the ops; verified).
  /// When `conjugating_gens` is empty, classes are computed by conjugating
  /// with every element, which is only allowed for small groups.
  static GroupEnumeration from_elements(std::shared_ptr<const GroupOps> ops,
                                        std::vector<std::uint64_t> elements,
                                        std::vector<std::uint64_t> conjugating_gens,
                                        std::string name,
                                        ExecPolicy policy = ExecPolicy::kSerial);

  /// Rebuilds from cached raw parts without re-deriving classes.
  static GroupEnumeration from_raw_parts(std::shared_ptr<const GroupOps> ops,
                                         std::string name,
                                         std::vector<std::uint64_t> elements,
                                         std::vector<std::uint64_t> generators,
                                         std::vector<ConjugacyClass> classes,
                                         std::vector<std::uint32_t> class_of);

  const std::string& name() const { return name_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<std::uint64_t>& elements() const { return elements_; }
  const std::vector<std::uint64_t>& generators() const { return generators_; }
  const GroupOps& ops() const { return *ops_; }
  std::shared_ptr<const GroupOps> ops_ptr() const { return ops_; }

  bool contains(std::uint64_t packed) const;
  std::uint32_t index_of(std::uint64_t packed) const;  // throws if absent

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::uint32_t num_classes() const { return std::uint32_t(classes_.size()); }
  std::uint32_t class_of_index(std::uint32_t element_index) const;
  std::uint32_t class_of(std::uint64_t packed) const;
  const std::vector<std::uint32_t>& class_of_elements() const { return class_of_; }

  /// Class of representative(c)^exponent.
  std::uint32_t class_power(std::uint32_t class_index, std::uint64_t exponent) const;
  /// Class of the inverses of class c.
  std::uint32_t inverse_class(std::uint32_t class_index) const;
  /// Least common multiple of all element orders.
  std::uint64_t exponent() const;

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return ops_->multiply(a, b); }
  std::uint64_t inv(std::uint64_t a) const { return ops_->inverse(a); }
  std::uint64_t identity() const { return ops_->identity(); }

  std::uint32_t element_order_of(std::uint64_t packed) const;

  /// conj_table[e * gens.size() + g] = index of gens[g] * x_e * gens[g]^{-1}.
  /// OpenMP-parallel when built with it; see conjugation_table() for the
  /// policy-selected entry point.
  std::vector<std::uint32_t> conjugation_table_parallel(
      const std::vector<std::uint64_t>& gens) const;

 private:
  void build_index();
  void compute_classes(const std::vector<std::uint64_t>& conjugating_gens,
                       ExecPolicy policy);

  std::shared_ptr<const GroupOps> ops_;
  std::string name_;
  std::vector<std::uint64_t> elements_;  // sorted ascending
  std::vector<std::uint64_t> generators_;
  FlatMap64 index_;
  std::vector<ConjugacyClass> classes_;  // sorted by (size, representative)
  std::vector<std::uint32_t> class_of_;  // element index -> class index
};

// ---------------------------------------------------------------------------
// Subgroup and quotient handles used by restriction / induction / inflation.
// ---------------------------------------------------------------------------

/// H <= G with both enumerated over the same ops/packing.
struct SubgroupHandle {
  const GroupEnumeration* group = nullptr;
  const GroupEnumeration* subgroup = nullptr;
  std::vector<std::uint32_t> class_fusion;  // H-class index -> G-class index
};

/// Verifies H's elements all lie in G and builds the class-fusion map.
/// Throws std::invalid_argument if H is not contained in G.
SubgroupHandle make_subgroup_handle(const GroupEnumeration& group,
                                    const GroupEnumeration& subgroup);

/// A verified surjective homomorphism q: G -> Q given element-wise.
struct QuotientHandle {
  const GroupEnumeration* group = nullptr;
  const GroupEnumeration* quotient = nullptr;
  std::vector<std::uint32_t> element_image;  // G element index -> Q element index
  std::vector<std::uint32_t> class_image;    // G class index -> Q class index
};

/// Checks the homomorphism property (exhaustively when |G|^2 <= pair_budget,
/// otherwise on a deterministic sample), surjectivity, and class
/// compatibility. Throws std::invalid_argument on any failure.
QuotientHandle make_quotient_handle(const GroupEnumeration& group,
                                    const GroupEnumeration& quotient,
                                    std::vector<std::uint32_t> element_image,
                                    std::uint64_t pair_budget = 1'000'000);

// ---------------------------------------------------------------------------
// Quotient by an enumerated normal subgroup. Cosets are packed as their
// minimum member, so the quotient is again a packed-element group.
// ---------------------------------------------------------------------------
class QuotientOps final : public GroupOps {
 public:
  QuotientOps(std::shared_ptr<const GroupOps> parent,
              std::shared_ptr<const std::vector<std::uint64_t>> normal_elements,
              std::string description);

  std::uint64_t canonical(std::uint64_t parent_element) const;
  std::uint64_t identity() const override;
  std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const override;
  std::uint64_t inverse(std::uint64_t a) const override;
  std::string describe() const override { return description_; }

 private:
  std::shared_ptr<const GroupOps> parent_;
  std::shared_ptr<const std::vector<std::uint64_t>> normal_;
  std::string description_;
};

struct QuotientConstruction {
  GroupEnumeration quotient;
  std::vector<std::uint32_t> element_image;  // parent element index -> quotient index
};

/// Builds G/N. Verifies N is a subgroup of G normalized by G's generators
/// (or by all elements when G has no generator list).
QuotientConstruction quotient_by_normal_subgroup(
    const GroupEnumeration& group, const std::vector<std::uint64_t>& normal_elements,
    std::string name, ExecPolicy policy = ExecPolicy::kSerial);

// ---------------------------------------------------------------------------
// Data-parallel kernels shared by enumeration and class computations.
// Both variants produce identical output; see bench/ for the comparison.
// ---------------------------------------------------------------------------

/// conj_table[e * gens.size() + g] = index of gens[g] * x_e * gens[g]^{-1}.
std::vector<std::uint32_t> conjugation_table(const GroupEnumeration& group,
                                             const std::vector<std::uint64_t>& gens,
                                             ExecPolicy policy);

/// Class multiplication coefficients a_{ijk} for a fixed class k:
/// out[i * r + j] = #{(x, y) in C_i x C_j : x y = rep_k}.
std::vector<std::uint64_t> class_mult_column(const GroupEnumeration& group,
                                             std::uint32_t class_k,
                                             ExecPolicy policy);

}  // namespace cliffchar

#endif  // CLIFFCHAR_GROUP_HPP
