#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace condor {

// FNV-1a, fixed parameters, so hashes are identical on every platform.
constexpr std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t value);

// 8-hex-digit digest used where a short marker is enough (mock replies).
std::string short_hash(std::string_view data);

// 16-hex-digit digest for content-addressed identifiers and file hashes.
std::string content_hash(std::string_view data);

// splitmix64 step; used to derive per-cell RNG seeds from a run seed.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::string_view salt) {
  return mix64(base ^ fnv1a64(salt));
}

}  // namespace condor
