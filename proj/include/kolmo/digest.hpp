#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace kolmo {

/// FNV-1a, 64 bit. Stable fingerprint for description texts and reports;
/// not cryptographic.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_hex16(std::uint64_t v);

}  // namespace kolmo
