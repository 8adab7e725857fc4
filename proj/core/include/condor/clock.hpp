#pragma once

#include <cstdint>
#include <string>

namespace condor {

// RFC 3339 UTC, second resolution: 2025-03-01T12:00:00Z
std::string format_rfc3339(std::int64_t unix_seconds);

std::string now_rfc3339();

// Fixed stamp used by deterministic (mock) runs so reruns hash identically.
inline const char* epoch_rfc3339() { return "1970-01-01T00:00:00Z"; }

}  // namespace condor
