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

#include "cliffchar/session.hpp"

#include <filesystem>

namespace cliffchar {

namespace {

// Enumeration <-> cache payload. The ops description pins the element type.
void write_enumeration(CacheWriter& writer, const GroupEnumeration& g) {
  writer.put_string(g.ops().describe());
  writer.put_string(g.name());
  writer.put_u64_vector(g.elements());
  writer.put_u64_vector(g.generators());
  writer.put_u64(g.classes().size());
  for (const ConjugacyClass& c : g.classes()) {
    writer.put_u64(c.representative);
    writer.put_u64(c.size);
    writer.put_u64(c.element_order);
    writer.put_u64(c.centralizer_order);
  }
  writer.put_u32_vector(g.class_of_elements());
}

std::optional<GroupEnumeration> read_enumeration(
    CacheReader& reader, std::shared_ptr<const GroupOps> ops) {
  try {
    std::string ops_desc = reader.get_string();
    if (ops_desc != ops->describe()) return std::nullopt;
    std::string name = reader.get_string();
    std::vector<std::uint64_t> elements = reader.get_u64_vector();
    std::vector<std::uint64_t> generators = reader.get_u64_vector();
    std::uint64_t num_classes = reader.get_u64();
    std::vector<ConjugacyClass> classes(static_cast<std::size_t>(num_classes));
    for (auto& c : classes) {
      c.representative = reader.get_u64();
      c.size = reader.get_u64();
      c.element_order = std::uint32_t(reader.get_u64());
      c.centralizer_order = reader.get_u64();
    }
    std::vector<std::uint32_t> class_of = reader.get_u32_vector();
    return GroupEnumeration::from_raw_parts(std::move(ops), std::move(name),
                                            std::move(elements),
                                            std::move(generators),
                                            std::move(classes),
                                            std::move(class_of));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

Session::Session(SessionConfig config) : config_(std::move(config)) {
  if (config_.cache_policy != CachePolicy::kOff) {
    resolved_cache_dir_ = resolve_cache_dir(config_.cache_dir);
    if (config_.cache_policy == CachePolicy::kReadWrite) {
      std::error_code ec;
      std::filesystem::create_directories(resolved_cache_dir_, ec);
      if (ec) config_.cache_policy = CachePolicy::kOff;
    }
  }
}

std::string Session::cache_path(const std::string& kind, std::size_t n,
                                std::uint64_t gen_hash) const {
  char hash_hex[17];
  std::snprintf(hash_hex, sizeof hash_hex, "%016llx",
                static_cast<unsigned long long>(gen_hash));
  return resolved_cache_dir_ + "/" + kind + "-n" + std::to_string(n) + "-g" +
         hash_hex + ".cch";
}

GroupEnumeration Session::load_or_build_clifford(std::size_t n) {
  auto ops = std::make_shared<CliffordOps>(n);
  std::vector<std::uint64_t> gens;
  for (const CliffordElement& g : standard_generators(n)) {
    gens.push_back(pack_clifford(g));
  }
  std::string path;
  if (config_.cache_policy != CachePolicy::kOff) {
    path = cache_path("clifford", n, fnv1a_u64s(gens));
    if (auto reader = CacheReader::read_file(path)) {
      if (auto cached = read_enumeration(*reader, ops)) return std::move(*cached);
    }
  }
  GroupEnumeration built = enumerate_clifford(n, config_.closure_budget,
                                              config_.policy, config_.allow_large);
  if (config_.cache_policy == CachePolicy::kReadWrite) {
    CacheWriter writer;
    write_enumeration(writer, built);
    writer.write_file(path);  // best effort
  }
  return built;
}

InertiaData Session::load_or_build_inertia(std::size_t n) {
  std::vector<std::uint64_t> gens;
  for (const CliffordElement& g : inertia_generators(n)) {
    gens.push_back(pack_clifford(g));
  }
  std::string path;
  auto ops = std::make_shared<CliffordOps>(n);
  if (config_.cache_policy != CachePolicy::kOff) {
    path = cache_path("inertia", n, fnv1a_u64s(gens));
    if (auto reader = CacheReader::read_file(path)) {
      if (auto group = read_enumeration(*reader, ops)) {
        try {
          InertiaData data;
          data.n = n;
          data.y1 = inertia_fixed_vector(n);
          data.generator_elements = inertia_generators(n);
          data.group = std::move(*group);
          data.sigma1_prime = reader->get_i8_vector();
          data.affine_image = reader->get_u64_vector();
          if (data.sigma1_prime.size() == data.group.order() &&
              (n == 1 || data.affine_image.size() == data.group.order())) {
            return data;
          }
        } catch (const std::exception&) {
          // fall through to rebuild
        }
      }
    }
  }
  // Stabilizer-set cross-check runs when the ambient group is at desk scale.
  const GroupEnumeration* ambient = n <= 2 ? &clifford_group(n) : nullptr;
  InertiaData data =
      enumerate_inertia(n, ambient, config_.closure_budget, config_.policy);
  if (config_.cache_policy == CachePolicy::kReadWrite) {
    CacheWriter writer;
    write_enumeration(writer, data.group);
    writer.put_i8_vector(data.sigma1_prime);
    writer.put_u64_vector(data.affine_image);
    writer.write_file(path);
  }
  return data;
}

const GroupEnumeration& Session::clifford_group(std::size_t n) {
  auto it = cliffords_.find(n);
  if (it == cliffords_.end()) {
    it = cliffords_
             .emplace(n, std::make_unique<GroupEnumeration>(
                             load_or_build_clifford(n)))
             .first;
  }
  return *it->second;
}

const GroupEnumeration& Session::sp_group(std::size_t n) {
  auto it = sps_.find(n);
  if (it == sps_.end()) {
    it = sps_.emplace(n, std::make_unique<GroupEnumeration>(enumerate_sp(
                             n, config_.closure_budget, config_.policy)))
             .first;
  }
  return *it->second;
}

const GroupEnumeration& Session::affine_group(std::size_t m) {
  auto it = affines_.find(m);
  if (it == affines_.end()) {
    it = affines_
             .emplace(m, std::make_unique<GroupEnumeration>(
                             enumerate_affine(m, config_.policy)))
             .first;
  }
  return *it->second;
}

const InertiaData& Session::inertia(std::size_t n) {
  auto it = inertias_.find(n);
  if (it == inertias_.end()) {
    it = inertias_
             .emplace(n, std::make_unique<InertiaData>(load_or_build_inertia(n)))
             .first;
  }
  return *it->second;
}

const Session::InertiaQuotient& Session::inertia_quotient(std::size_t n) {
  auto it = inertia_quotients_.find(n);
  if (it == inertia_quotients_.end()) {
    const InertiaData& data = inertia(n);
    std::vector<std::uint64_t> embeds;
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << (2 * n)); ++y) {
      embeds.push_back(pack_clifford(pauli_embed(BitVec(2 * n, y))));
    }
    QuotientConstruction built = quotient_by_normal_subgroup(
        data.group, embeds, "IN" + std::to_string(n) + "/paulis",
        config_.policy);
    InertiaQuotient q;
    q.group = std::make_unique<GroupEnumeration>(std::move(built.quotient));
    q.from_inertia =
        make_quotient_handle(data.group, *q.group, std::move(built.element_image));
    it = inertia_quotients_.emplace(n, std::move(q)).first;
  }
  return it->second;
}

const QuotientHandle& Session::clifford_to_sp(std::size_t n) {
  auto it = clifford_to_sp_.find(n);
  if (it == clifford_to_sp_.end()) {
    const GroupEnumeration& cn = clifford_group(n);
    const GroupEnumeration& sp = sp_group(n);
    std::uint64_t gamma_mask = (std::uint64_t{1} << (4 * n * n)) - 1;
    std::vector<std::uint32_t> image(cn.order());
    for (std::uint32_t i = 0; i < cn.order(); ++i) {
      image[i] = sp.index_of(cn.elements()[i] & gamma_mask);
    }
    it = clifford_to_sp_
             .emplace(n, make_quotient_handle(cn, sp, std::move(image)))
             .first;
  }
  return it->second;
}

const QuotientHandle& Session::inertia_to_affine(std::size_t n) {
  auto it = inertia_to_affine_.find(n);
  if (it == inertia_to_affine_.end()) {
    if (n < 2) {
      throw std::invalid_argument("inertia_to_affine: needs n >= 2");
    }
    const InertiaData& data = inertia(n);
    const GroupEnumeration& affine = affine_group(n - 1);
    std::vector<std::uint32_t> image(data.group.order());
    for (std::uint32_t i = 0; i < data.group.order(); ++i) {
      image[i] = affine.index_of(data.affine_image[i]);
    }
    it = inertia_to_affine_
             .emplace(n, make_quotient_handle(data.group, affine, std::move(image)))
             .first;
  }
  return it->second;
}

const SubgroupHandle& Session::inertia_in_clifford(std::size_t n) {
  auto it = inertia_in_clifford_.find(n);
  if (it == inertia_in_clifford_.end()) {
    it = inertia_in_clifford_
             .emplace(n, make_subgroup_handle(clifford_group(n), inertia(n).group))
             .first;
  }
  return it->second;
}

const GroupEnumeration& Session::pauli_subgroup(std::size_t n) {
  auto it = pauli_subgroups_.find(n);
  if (it == pauli_subgroups_.end()) {
    std::vector<std::uint64_t> embeds;
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << (2 * n)); ++y) {
      embeds.push_back(pack_clifford(pauli_embed(BitVec(2 * n, y))));
    }
    // Abelian: conjugation by every element keeps classes singleton.
    it = pauli_subgroups_
             .emplace(n, std::make_unique<GroupEnumeration>(
                             GroupEnumeration::from_elements(
                                 std::make_shared<CliffordOps>(n),
                                 std::move(embeds), {},
                                 "P" + std::to_string(n), config_.policy)))
             .first;
  }
  return *it->second;
}

const SubgroupHandle& Session::pauli_in_clifford(std::size_t n) {
  auto it = pauli_in_clifford_.find(n);
  if (it == pauli_in_clifford_.end()) {
    it = pauli_in_clifford_
             .emplace(n, make_subgroup_handle(clifford_group(n), pauli_subgroup(n)))
             .first;
  }
  return it->second;
}

const ClassFunction& Session::sigma1_prime_character(std::size_t n) {
  auto it = sigma1_chars_.find(n);
  if (it == sigma1_chars_.end()) {
    const InertiaData& data = inertia(n);
    std::vector<Cyclotomic> per_element(data.group.order());
    for (std::size_t i = 0; i < per_element.size(); ++i) {
      per_element[i] = Cyclotomic(data.sigma1_prime[i]);
    }
    it = sigma1_chars_
             .emplace(n, std::make_unique<ClassFunction>(
                             class_function_from_element_values(data.group,
                                                                per_element)))
             .first;
  }
  return *it->second;
}

const CharacterTable* Session::find_table(const std::string& key) const {
  auto it = tables_.find(key);
  return it == tables_.end() ? nullptr : it->second.get();
}

const CharacterTable& Session::store_table(const std::string& key,
                                           CharacterTable table) {
  return *tables_.insert_or_assign(key, std::make_unique<CharacterTable>(
                                            std::move(table)))
              .first->second;
}

}  // namespace cliffchar
