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

#ifndef CLIFFCHAR_CACHE_HPP
#define CLIFFCHAR_CACHE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cliffchar {

// ---------------------------------------------------------------------------
// On-disk cache for group enumerations.
//
// Format: "CCH1" magic, a format version, the payload length, the payload,
// and an FNV-1a checksum of the payload. Incompatible or corrupt files are
// ignored and regenerated, never migrated; enumerations are cheap to rebuild
// at desk scale.
// ---------------------------------------------------------------------------

enum class CachePolicy { kReadWrite, kReadOnly, kOff };

CachePolicy cache_policy_from_string(const std::string& name);

/// Resolution order: explicit override, $CLIFFCHAR_CACHE, then the platform
/// cache directory ($XDG_CACHE_HOME/cliffchar or ~/.cache/cliffchar).
std::string resolve_cache_dir(const std::string& override_dir);

/// A flat, structured payload: unsigned words and byte blocks with a tiny
/// tag-length framing, enough for enumeration data.
class CacheWriter {
 public:
  void put_u64(std::uint64_t v);
  void put_string(const std::string& s);
  void put_u64_vector(const std::vector<std::uint64_t>& v);
  void put_u32_vector(const std::vector<std::uint32_t>& v);
  void put_i8_vector(const std::vector<std::int8_t>& v);

  /// Writes magic + version + payload + checksum. Returns false on IO error.
  bool write_file(const std::string& path) const;

 private:
  std::vector<std::uint8_t> payload_;
};

class CacheReader {
 public:
  /// Returns empty on missing file, bad magic/version, or checksum mismatch.
  static std::optional<CacheReader> read_file(const std::string& path);

  std::uint64_t get_u64();
  std::string get_string();
  std::vector<std::uint64_t> get_u64_vector();
  std::vector<std::uint32_t> get_u32_vector();
  std::vector<std::int8_t> get_i8_vector();
  bool exhausted() const { return at_ == payload_.size(); }

 private:
  std::vector<std::uint8_t> payload_;
  std::size_t at_ = 0;
};

/// FNV-1a, used for checksums and generator-set hashes in cache keys.
std::uint64_t fnv1a(const std::uint8_t* data, std::size_t size);
std::uint64_t fnv1a_u64s(const std::vector<std::uint64_t>& words);

}  // namespace cliffchar

#endif  // CLIFFCHAR_CACHE_HPP
