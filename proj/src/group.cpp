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

#include "cliffchar/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cliffchar {

namespace {

void sort_unique(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  return a / std::gcd(a, b) * b;
}

}  // namespace

// ---------------------------------------------------------------------------
// BFS closure
// ---------------------------------------------------------------------------

std::vector<std::uint64_t> bfs_closure(const GroupOps& ops,
                                       const std::vector<std::uint64_t>& gens,
                                       const ClosureBudget& budget,
                                       ExecPolicy policy) {
  FlatMap64 seen;
  std::vector<std::uint64_t> elements;
  std::vector<std::uint64_t> frontier;

  auto insert = [&](std::uint64_t x) {
    if (seen.insert(x, std::uint32_t(elements.size()))) {
      if (elements.size() >= budget.max_elements) {
        throw std::runtime_error("bfs_closure: element budget exceeded for " +
                                 ops.describe());
      }
      elements.push_back(x);
      frontier.push_back(x);
      return true;
    }
    return false;
  };

  insert(ops.identity());
  for (std::uint64_t g : gens) insert(g);

  std::vector<std::uint64_t> current;
  while (!frontier.empty()) {
    current.swap(frontier);
    frontier.clear();
    if (policy == ExecPolicy::kParallel && current.size() >= 1024) {
#ifdef _OPENMP
      // Chunked parallel expansion: candidates are produced in parallel and
      // inserted serially so the resulting set is identical to the serial
      // kernel's.
      const std::size_t chunk = 1 << 20;
      for (std::size_t base = 0; base < current.size(); base += chunk) {
        std::size_t end = std::min(current.size(), base + chunk);
        std::vector<std::uint64_t> candidates((end - base) * gens.size());
#pragma omp parallel for schedule(static)
        for (std::int64_t i = std::int64_t(base); i < std::int64_t(end); ++i) {
          for (std::size_t g = 0; g < gens.size(); ++g) {
            candidates[(std::size_t(i) - base) * gens.size() + g] =
                ops.multiply(current[std::size_t(i)], gens[g]);
          }
        }
        sort_unique(candidates);
        for (std::uint64_t c : candidates) insert(c);
      }
      continue;
#endif
    }
    for (std::uint64_t a : current) {
      for (std::uint64_t g : gens) insert(ops.multiply(a, g));
    }
  }

  std::sort(elements.begin(), elements.end());
  return elements;
}

// ---------------------------------------------------------------------------
// GroupEnumeration
// ---------------------------------------------------------------------------

GroupEnumeration GroupEnumeration::generate(std::shared_ptr<const GroupOps> ops,
                                            std::vector<std::uint64_t> gens,
                                            std::string name,
                                            const ClosureBudget& budget,
                                            ExecPolicy policy) {
  GroupEnumeration g;
  g.ops_ = std::move(ops);
  g.name_ = std::move(name);
  g.generators_ = gens;
  g.elements_ = bfs_closure(*g.ops_, gens, budget, policy);
  g.build_index();
  g.compute_classes(gens, policy);
  return g;
}

GroupEnumeration GroupEnumeration::from_elements(
    std::shared_ptr<const GroupOps> ops, std::vector<std::uint64_t> elements,
    std::vector<std::uint64_t> conjugating_gens, std::string name,
    ExecPolicy policy) {
  GroupEnumeration g;
  g.ops_ = std::move(ops);
  g.name_ = std::move(name);
  g.generators_ = conjugating_gens;
  g.elements_ = std::move(elements);
  sort_unique(g.elements_);
  g.build_index();
  // Closure sanity: e in set, closed under products with a few probes is not
  // enough; verify closure fully for explicitly provided sets.
  if (!g.contains(g.ops_->identity())) {
    throw std::invalid_argument("from_elements: identity missing in " + g.name_);
  }
  if (g.elements_.size() <= 4096) {
    for (std::uint64_t a : g.elements_) {
      for (std::uint64_t b : g.elements_) {
        if (!g.contains(g.ops_->multiply(a, b))) {
          throw std::invalid_argument("from_elements: set not closed in " + g.name_);
        }
      }
    }
  } else {
    for (std::uint64_t a : g.elements_) {
      if (!g.contains(g.ops_->inverse(a))) {
        throw std::invalid_argument("from_elements: set not inverse-closed in " +
                                    g.name_);
      }
    }
  }
  g.compute_classes(conjugating_gens, policy);
  return g;
}

GroupEnumeration GroupEnumeration::from_raw_parts(
    std::shared_ptr<const GroupOps> ops, std::string name,
    std::vector<std::uint64_t> elements, std::vector<std::uint64_t> generators,
    std::vector<ConjugacyClass> classes, std::vector<std::uint32_t> class_of) {
  GroupEnumeration g;
  g.ops_ = std::move(ops);
  g.name_ = std::move(name);
  g.elements_ = std::move(elements);
  g.generators_ = std::move(generators);
  g.classes_ = std::move(classes);
  g.class_of_ = std::move(class_of);
  if (!std::is_sorted(g.elements_.begin(), g.elements_.end()) ||
      g.class_of_.size() != g.elements_.size()) {
    throw std::invalid_argument("from_raw_parts: malformed enumeration data");
  }
  g.build_index();
  return g;
}

void GroupEnumeration::build_index() {
  index_ = FlatMap64(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    index_.insert(elements_[i], std::uint32_t(i));
  }
}

bool GroupEnumeration::contains(std::uint64_t packed) const {
  return index_.contains(packed);
}

std::uint32_t GroupEnumeration::index_of(std::uint64_t packed) const {
  std::uint32_t idx = index_.find(packed);
  if (idx == FlatMap64::kNotFound) {
    throw std::out_of_range("element not in enumeration of " + name_);
  }
  return idx;
}

std::uint32_t GroupEnumeration::class_of_index(std::uint32_t element_index) const {
  return class_of_.at(element_index);
}

std::uint32_t GroupEnumeration::class_of(std::uint64_t packed) const {
  return class_of_.at(index_of(packed));
}

std::uint32_t GroupEnumeration::element_order_of(std::uint64_t packed) const {
  std::uint64_t e = ops_->identity();
  std::uint64_t acc = packed;
  std::uint32_t order = 1;
  while (acc != e) {
    acc = ops_->multiply(acc, packed);
    ++order;
    if (order > elements_.size()) {
      throw std::logic_error("element order exceeds group order in " + name_);
    }
  }
  return order;
}

void GroupEnumeration::compute_classes(
    const std::vector<std::uint64_t>& conjugating_gens, ExecPolicy policy) {
  const std::size_t n = elements_.size();
  std::vector<std::uint64_t> conjugators = conjugating_gens;
  if (conjugators.empty()) {
    if (n > 20'000) {
      throw std::invalid_argument(
          "conjugacy classes without generators need |G| <= 20000 (" + name_ + ")");
    }
    conjugators = elements_;
  }

  constexpr std::uint32_t kUnassigned = ~std::uint32_t{0};
  std::vector<std::uint32_t> class_id(n, kUnassigned);
  std::vector<std::vector<std::uint32_t>> members_by_class;

  // Orbit flood under conjugation. The parallel kernel precomputes the
  // conjugation table; the serial reference multiplies on the fly.
  std::vector<std::uint32_t> table;
  if (policy == ExecPolicy::kParallel) {
    table = conjugation_table_parallel(conjugators);
  }

  std::vector<std::uint32_t> stack;
  for (std::uint32_t seed = 0; seed < n; ++seed) {
    if (class_id[seed] != kUnassigned) continue;
    std::uint32_t cid = std::uint32_t(members_by_class.size());
    members_by_class.emplace_back();
    class_id[seed] = cid;
    stack.assign(1, seed);
    members_by_class[cid].push_back(seed);
    while (!stack.empty()) {
      std::uint32_t idx = stack.back();
      stack.pop_back();
      for (std::size_t gi = 0; gi < conjugators.size(); ++gi) {
        std::uint32_t target;
        if (!table.empty()) {
          target = table[std::size_t(idx) * conjugators.size() + gi];
        } else {
          std::uint64_t g = conjugators[gi];
          std::uint64_t y = ops_->multiply(ops_->multiply(g, elements_[idx]),
                                           ops_->inverse(g));
          target = index_of(y);
        }
        if (class_id[target] == kUnassigned) {
          class_id[target] = cid;
          members_by_class[cid].push_back(target);
          stack.push_back(target);
        }
      }
    }
  }

  // Canonicalize: representative = min packed member, order by (size, rep).
  struct RawClass {
    std::uint64_t rep;
    std::uint64_t size;
    std::uint32_t old_id;
  };
  std::vector<RawClass> raw;
  raw.reserve(members_by_class.size());
  for (std::uint32_t cid = 0; cid < members_by_class.size(); ++cid) {
    std::uint64_t rep = ~std::uint64_t{0};
    for (std::uint32_t idx : members_by_class[cid]) {
      rep = std::min(rep, elements_[idx]);
    }
    raw.push_back({rep, members_by_class[cid].size(), cid});
  }
  std::sort(raw.begin(), raw.end(), [](const RawClass& a, const RawClass& b) {
    return a.size != b.size ? a.size < b.size : a.rep < b.rep;
  });

  std::vector<std::uint32_t> new_id(raw.size());
  classes_.clear();
  classes_.reserve(raw.size());
  for (std::uint32_t i = 0; i < raw.size(); ++i) {
    new_id[raw[i].old_id] = i;
    ConjugacyClass c;
    c.representative = raw[i].rep;
    c.size = raw[i].size;
    c.element_order = element_order_of(raw[i].rep);
    if (n % raw[i].size != 0) {
      throw std::logic_error("class size does not divide group order in " + name_);
    }
    c.centralizer_order = n / raw[i].size;
    classes_.push_back(c);
  }
  class_of_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) class_of_[i] = new_id[class_id[i]];
}

std::vector<std::uint32_t> GroupEnumeration::conjugation_table_parallel(
    const std::vector<std::uint64_t>& gens) const {
  const std::size_t n = elements_.size();
  std::vector<std::uint64_t> gen_inverses(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    gen_inverses[i] = ops_->inverse(gens[i]);
  }
  std::vector<std::uint32_t> table(n * gens.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t e = 0; e < std::int64_t(n); ++e) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      std::uint64_t y = ops_->multiply(ops_->multiply(gens[g], elements_[e]),
                                       gen_inverses[g]);
      table[std::size_t(e) * gens.size() + g] = index_of(y);
    }
  }
  return table;
}

std::uint32_t GroupEnumeration::class_power(std::uint32_t class_index,
                                            std::uint64_t exponent) const {
  std::uint64_t rep = classes_.at(class_index).representative;
  std::uint64_t acc = ops_->identity();
  std::uint64_t base = rep;
  while (exponent > 0) {
    if (exponent & 1) acc = ops_->multiply(acc, base);
    base = ops_->multiply(base, base);
    exponent >>= 1;
  }
  return class_of(acc);
}

std::uint32_t GroupEnumeration::inverse_class(std::uint32_t class_index) const {
  return class_of(ops_->inverse(classes_.at(class_index).representative));
}

std::uint64_t GroupEnumeration::exponent() const {
  std::uint64_t e = 1;
  for (const auto& c : classes_) e = lcm_u64(e, c.element_order);
  return e;
}

// ---------------------------------------------------------------------------
// Subgroup / quotient handles
// ---------------------------------------------------------------------------

SubgroupHandle make_subgroup_handle(const GroupEnumeration& group,
                                    const GroupEnumeration& subgroup) {
  SubgroupHandle handle;
  handle.group = &group;
  handle.subgroup = &subgroup;
  for (std::uint64_t h : subgroup.elements()) {
    if (!group.contains(h)) {
      throw std::invalid_argument(subgroup.name() + " is not a subgroup of " +
                                  group.name());
    }
  }
  handle.class_fusion.resize(subgroup.num_classes());
  for (std::uint32_t c = 0; c < subgroup.num_classes(); ++c) {
    handle.class_fusion[c] = group.class_of(subgroup.classes()[c].representative);
  }
  return handle;
}

QuotientHandle make_quotient_handle(const GroupEnumeration& group,
                                    const GroupEnumeration& quotient,
                                    std::vector<std::uint32_t> element_image,
                                    std::uint64_t pair_budget) {
  if (element_image.size() != group.order()) {
    throw std::invalid_argument("quotient map must cover every element");
  }
  QuotientHandle handle;
  handle.group = &group;
  handle.quotient = &quotient;
  handle.element_image = std::move(element_image);

  // Surjectivity.
  std::vector<bool> hit(quotient.order(), false);
  for (std::uint32_t img : handle.element_image) hit.at(img) = true;
  for (bool h : hit) {
    if (!h) throw std::invalid_argument("quotient map is not surjective");
  }

  // Homomorphism property. q(e) = e plus q(g s) = q(g) q(s) for every
  // element g and generator s forces multiplicativity on all pairs by
  // induction over words, so checking the generator edges is complete.
  // Without generators, fall back to exhaustive pairs within budget.
  auto check_pair = [&](std::size_t i, std::uint64_t h, std::uint32_t h_image) {
    std::uint64_t g = group.elements()[i];
    std::uint64_t qg = quotient.elements()[handle.element_image[i]];
    std::uint64_t qh = quotient.elements()[h_image];
    std::uint64_t lhs = quotient.elements()[handle.element_image[group.index_of(
        group.mul(g, h))]];
    if (lhs != quotient.mul(qg, qh)) {
      throw std::invalid_argument("quotient map is not a homomorphism");
    }
  };
  std::uint64_t n = group.order();
  if (quotient.elements()[handle.element_image[group.index_of(
          group.identity())]] != quotient.identity()) {
    throw std::invalid_argument("quotient map does not send identity to identity");
  }
  if (!group.generators().empty()) {
    for (std::uint64_t s : group.generators()) {
      std::uint32_t s_image = handle.element_image[group.index_of(s)];
      for (std::size_t i = 0; i < n; ++i) check_pair(i, s, s_image);
    }
  } else if (n * n <= pair_budget) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        check_pair(i, group.elements()[j], handle.element_image[j]);
      }
    }
  } else {
    throw std::invalid_argument(
        "quotient verification needs generators or a small group");
  }

  // Class compatibility: every element of a G-class must map into one Q-class.
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  handle.class_image.assign(group.num_classes(), kUnset);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t gc = group.class_of_index(std::uint32_t(i));
    std::uint32_t qc = quotient.class_of_index(handle.element_image[i]);
    if (handle.class_image[gc] == kUnset) {
      handle.class_image[gc] = qc;
    } else if (handle.class_image[gc] != qc) {
      throw std::invalid_argument("quotient map is not class-compatible");
    }
  }
  return handle;
}

// ---------------------------------------------------------------------------
// QuotientOps
// ---------------------------------------------------------------------------

QuotientOps::QuotientOps(std::shared_ptr<const GroupOps> parent,
                         std::shared_ptr<const std::vector<std::uint64_t>> normal_elements,
                         std::string description)
    : parent_(std::move(parent)),
      normal_(std::move(normal_elements)),
      description_(std::move(description)) {
  if (normal_->empty()) {
    throw std::invalid_argument("QuotientOps: empty normal subgroup");
  }
}

std::uint64_t QuotientOps::canonical(std::uint64_t parent_element) const {
  std::uint64_t best = ~std::uint64_t{0};
  for (std::uint64_t k : *normal_) {
    best = std::min(best, parent_->multiply(parent_element, k));
  }
  return best;
}

std::uint64_t QuotientOps::identity() const { return canonical(parent_->identity()); }

std::uint64_t QuotientOps::multiply(std::uint64_t a, std::uint64_t b) const {
  return canonical(parent_->multiply(a, b));
}

std::uint64_t QuotientOps::inverse(std::uint64_t a) const {
  return canonical(parent_->inverse(a));
}

QuotientConstruction quotient_by_normal_subgroup(
    const GroupEnumeration& group, const std::vector<std::uint64_t>& normal_elements,
    std::string name, ExecPolicy policy) {
  std::vector<std::uint64_t> normal = normal_elements;
  sort_unique(normal);
  // N must be a subgroup...
  FlatMap64 nset(normal.size());
  for (std::size_t i = 0; i < normal.size(); ++i) {
    nset.insert(normal[i], std::uint32_t(i));
  }
  for (std::uint64_t a : normal) {
    for (std::uint64_t b : normal) {
      if (!nset.contains(group.mul(a, b))) {
        throw std::invalid_argument("quotient: normal set is not a subgroup");
      }
    }
  }
  // ... normalized by G (generator check suffices when generators exist).
  const std::vector<std::uint64_t>& normalizers =
      group.generators().empty() ? group.elements() : group.generators();
  for (std::uint64_t g : normalizers) {
    std::uint64_t gi = group.inv(g);
    for (std::uint64_t k : normal) {
      if (!nset.contains(group.mul(group.mul(g, k), gi))) {
        throw std::invalid_argument("quotient: subgroup is not normal");
      }
    }
  }

  auto ops = std::make_shared<QuotientOps>(
      group.ops_ptr(), std::make_shared<const std::vector<std::uint64_t>>(normal),
      group.ops().describe() + "/" + name);

  // Materialize cosets.
  std::vector<std::uint32_t> element_image(group.order());
  std::vector<std::uint64_t> coset_reps;
  FlatMap64 rep_index;
  for (std::size_t i = 0; i < group.order(); ++i) {
    std::uint64_t rep = ops->canonical(group.elements()[i]);
    std::uint32_t idx = rep_index.find(rep);
    if (idx == FlatMap64::kNotFound) {
      idx = std::uint32_t(coset_reps.size());
      rep_index.insert(rep, idx);
      coset_reps.push_back(rep);
    }
    element_image[i] = idx;
  }

  std::vector<std::uint64_t> quotient_gens;
  for (std::uint64_t g : group.generators()) {
    quotient_gens.push_back(ops->canonical(g));
  }
  sort_unique(quotient_gens);

  GroupEnumeration quotient = GroupEnumeration::from_elements(
      ops, coset_reps, quotient_gens, std::move(name), policy);

  // Re-base the image map onto the sorted enumeration order.
  for (std::size_t i = 0; i < group.order(); ++i) {
    element_image[i] = quotient.index_of(ops->canonical(group.elements()[i]));
  }

  return QuotientConstruction{std::move(quotient), std::move(element_image)};
}

// ---------------------------------------------------------------------------
// Kernels
// ---------------------------------------------------------------------------

std::vector<std::uint32_t> conjugation_table(const GroupEnumeration& group,
                                             const std::vector<std::uint64_t>& gens,
                                             ExecPolicy policy) {
  if (policy == ExecPolicy::kParallel) {
    return group.conjugation_table_parallel(gens);
  }
  const std::size_t n = group.order();
  std::vector<std::uint32_t> table(n * gens.size());
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      std::uint64_t y = group.mul(group.mul(gens[g], group.elements()[e]),
                                  group.inv(gens[g]));
      table[e * gens.size() + g] = group.index_of(y);
    }
  }
  return table;
}

std::vector<std::uint64_t> class_mult_column(const GroupEnumeration& group,
                                             std::uint32_t class_k,
                                             ExecPolicy policy) {
  const std::size_t r = group.num_classes();
  const std::uint64_t z = group.classes().at(class_k).representative;
  std::vector<std::uint64_t> out(r * r, 0);
  const std::size_t n = group.order();
#ifdef _OPENMP
  if (policy == ExecPolicy::kParallel) {
    int threads = omp_get_max_threads();
    std::vector<std::vector<std::uint64_t>> partial(
        threads, std::vector<std::uint64_t>(r * r, 0));
#pragma omp parallel
    {
      auto& mine = partial[omp_get_thread_num()];
#pragma omp for schedule(static)
      for (std::int64_t xi = 0; xi < std::int64_t(n); ++xi) {
        std::uint64_t x = group.elements()[xi];
        std::uint32_t i = group.class_of_index(std::uint32_t(xi));
        std::uint32_t j = group.class_of(group.mul(group.inv(x), z));
        mine[std::size_t(i) * r + j] += 1;
      }
    }
    for (const auto& p : partial) {
      for (std::size_t idx = 0; idx < out.size(); ++idx) out[idx] += p[idx];
    }
    return out;
  }
#else
  (void)policy;
#endif
  for (std::size_t xi = 0; xi < n; ++xi) {
    std::uint64_t x = group.elements()[xi];
    std::uint32_t i = group.class_of_index(std::uint32_t(xi));
    std::uint32_t j = group.class_of(group.mul(group.inv(x), z));
    out[std::size_t(i) * r + j] += 1;
  }
  return out;
}

}  // namespace cliffchar
