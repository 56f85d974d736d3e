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

#include "cliffchar/cache.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace cliffchar {

namespace {

constexpr char kMagic[4] = {'C', 'C', 'H', '1'};
constexpr std::uint32_t kFormatVersion = 1;

void append_raw_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(std::uint8_t(v >> (8 * i)));
}

std::uint64_t read_raw_u64(const std::vector<std::uint8_t>& in, std::size_t& at) {
  if (at + 8 > in.size()) throw std::out_of_range("cache payload truncated");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t(in[at + i]) << (8 * i);
  at += 8;
  return v;
}

}  // namespace

std::uint64_t fnv1a(const std::uint8_t* data, std::size_t size) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (std::size_t i = 0; i < size; ++i) {
    hash ^= data[i];
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::uint64_t fnv1a_u64s(const std::vector<std::uint64_t>& words) {
  std::vector<std::uint8_t> bytes;
  bytes.reserve(words.size() * 8);
  for (std::uint64_t w : words) append_raw_u64(bytes, w);
  return fnv1a(bytes.data(), bytes.size());
}

CachePolicy cache_policy_from_string(const std::string& name) {
  if (name == "read-write") return CachePolicy::kReadWrite;
  if (name == "read-only") return CachePolicy::kReadOnly;
  if (name == "off") return CachePolicy::kOff;
  throw std::invalid_argument("unknown cache policy: " + name);
}

std::string resolve_cache_dir(const std::string& override_dir) {
  if (!override_dir.empty()) return override_dir;
  if (const char* env = std::getenv("CLIFFCHAR_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::string(xdg) + "/cliffchar";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::string(home) + "/.cache/cliffchar";
  }
  return ".cliffchar-cache";
}

void CacheWriter::put_u64(std::uint64_t v) { append_raw_u64(payload_, v); }

void CacheWriter::put_string(const std::string& s) {
  put_u64(s.size());
  payload_.insert(payload_.end(), s.begin(), s.end());
}

void CacheWriter::put_u64_vector(const std::vector<std::uint64_t>& v) {
  put_u64(v.size());
  for (std::uint64_t w : v) put_u64(w);
}

void CacheWriter::put_u32_vector(const std::vector<std::uint32_t>& v) {
  put_u64(v.size());
  for (std::uint32_t w : v) {
    payload_.push_back(std::uint8_t(w));
    payload_.push_back(std::uint8_t(w >> 8));
    payload_.push_back(std::uint8_t(w >> 16));
    payload_.push_back(std::uint8_t(w >> 24));
  }
}

void CacheWriter::put_i8_vector(const std::vector<std::int8_t>& v) {
  put_u64(v.size());
  for (std::int8_t w : v) payload_.push_back(std::uint8_t(w));
}

bool CacheWriter::write_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out.write(kMagic, 4);
  std::uint32_t version = kFormatVersion;
  out.write(reinterpret_cast<const char*>(&version), 4);
  std::uint64_t size = payload_.size();
  out.write(reinterpret_cast<const char*>(&size), 8);
  out.write(reinterpret_cast<const char*>(payload_.data()),
            std::streamsize(payload_.size()));
  std::uint64_t checksum = fnv1a(payload_.data(), payload_.size());
  out.write(reinterpret_cast<const char*>(&checksum), 8);
  return bool(out);
}

std::optional<CacheReader> CacheReader::read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[4];
  std::uint32_t version = 0;
  std::uint64_t size = 0;
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(&version), 4);
  in.read(reinterpret_cast<char*>(&size), 8);
  if (!in || std::memcmp(magic, kMagic, 4) != 0 || version != kFormatVersion) {
    return std::nullopt;
  }
  if (size > (std::uint64_t{1} << 34)) return std::nullopt;  // implausible
  CacheReader reader;
  reader.payload_.resize(std::size_t(size));
  in.read(reinterpret_cast<char*>(reader.payload_.data()), std::streamsize(size));
  std::uint64_t checksum = 0;
  in.read(reinterpret_cast<char*>(&checksum), 8);
  if (!in || checksum != fnv1a(reader.payload_.data(), reader.payload_.size())) {
    return std::nullopt;
  }
  return reader;
}

std::uint64_t CacheReader::get_u64() { return read_raw_u64(payload_, at_); }

std::string CacheReader::get_string() {
  std::uint64_t size = get_u64();
  if (at_ + size > payload_.size()) {
    throw std::out_of_range("cache payload truncated");
  }
  std::string s(payload_.begin() + std::ptrdiff_t(at_),
                payload_.begin() + std::ptrdiff_t(at_ + size));
  at_ += size;
  return s;
}

std::vector<std::uint64_t> CacheReader::get_u64_vector() {
  std::uint64_t size = get_u64();
  std::vector<std::uint64_t> v(static_cast<std::size_t>(size));
  for (auto& w : v) w = get_u64();
  return v;
}

std::vector<std::uint32_t> CacheReader::get_u32_vector() {
  std::uint64_t size = get_u64();
  if (at_ + size * 4 > payload_.size()) {
    throw std::out_of_range("cache payload truncated");
  }
  std::vector<std::uint32_t> v(static_cast<std::size_t>(size));
  for (auto& w : v) {
    w = std::uint32_t(payload_[at_]) | std::uint32_t(payload_[at_ + 1]) << 8 |
        std::uint32_t(payload_[at_ + 2]) << 16 |
        std::uint32_t(payload_[at_ + 3]) << 24;
    at_ += 4;
  }
  return v;
}

std::vector<std::int8_t> CacheReader::get_i8_vector() {
  std::uint64_t size = get_u64();
  if (at_ + size > payload_.size()) {
    throw std::out_of_range("cache payload truncated");
  }
  std::vector<std::int8_t> v(static_cast<std::size_t>(size));
  for (auto& w : v) w = std::int8_t(payload_[at_++]);
  return v;
}

}  // namespace cliffchar
