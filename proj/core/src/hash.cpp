#include "condor/hash.hpp"

namespace condor {

namespace {
constexpr char kHexDigits[] = "0123456789abcdef";
}

std::string hex64(std::uint64_t value) {
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHexDigits[value & 0xf];
    value >>= 4;
  }
  return out;
}

std::string short_hash(std::string_view data) {
  return hex64(fnv1a64(data)).substr(0, 8);
}

std::string content_hash(std::string_view data) {
  return hex64(fnv1a64(data));
}

}  // namespace condor
