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

#ifndef CLIFFCHAR_FLAT_MAP_HPP
#define CLIFFCHAR_FLAT_MAP_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cliffchar {

/// Open-addressing hash map from packed group elements (uint64_t) to 32-bit
/// indices. Linear probing, power-of-two capacity, max load factor 1/2.
/// The key ~0ull is reserved as the empty slot marker; packed encodings never
/// use it (they occupy at most 62 bits).
class FlatMap64 {
 public:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
  static constexpr std::uint32_t kNotFound = ~std::uint32_t{0};

  explicit FlatMap64(std::size_t expected = 16) { rehash_for(expected); }

  std::size_t size() const { return size_; }

  /// Inserts key -> value if absent. Returns true when newly inserted.
  bool insert(std::uint64_t key, std::uint32_t value) {
    if (key == kEmpty) throw std::invalid_argument("FlatMap64: reserved key");
    if ((size_ + 1) * 2 > slots_.size()) rehash_for(size_ * 2 + 16);
    std::size_t pos = probe(key);
    if (slots_[pos] != kEmpty) return false;
    slots_[pos] = key;
    values_[pos] = value;
    ++size_;
    return true;
  }

  std::uint32_t find(std::uint64_t key) const {
    std::size_t pos = probe(key);
    return slots_[pos] == kEmpty ? kNotFound : values_[pos];
  }

  bool contains(std::uint64_t key) const { return find(key) != kNotFound; }

  void reserve(std::size_t expected) {
    if (expected * 2 > slots_.size()) rehash_for(expected);
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::size_t probe(std::uint64_t key) const {
    std::size_t mask = slots_.size() - 1;
    std::size_t pos = std::size_t(mix(key)) & mask;
    while (slots_[pos] != kEmpty && slots_[pos] != key) pos = (pos + 1) & mask;
    return pos;
  }

  void rehash_for(std::size_t expected) {
    std::size_t capacity = 32;
    while (capacity < expected * 2) capacity <<= 1;
    std::vector<std::uint64_t> old_slots = std::move(slots_);
    std::vector<std::uint32_t> old_values = std::move(values_);
    slots_.assign(capacity, kEmpty);
    values_.assign(capacity, 0);
    for (std::size_t i = 0; i < old_slots.size(); ++i) {
      if (old_slots[i] == kEmpty) continue;
      std::size_t pos = probe(old_slots[i]);
      slots_[pos] = old_slots[i];
      values_[pos] = old_values[i];
    }
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> slots_;
  std::vector<std::uint32_t> values_;
};

}  // namespace cliffchar

#endif  // CLIFFCHAR_FLAT_MAP_HPP
