#pragma once

#include <cstdint>
#include <string_view>

namespace spechtvar {

/// 64-bit FNV-1a; stable across platforms, used for seeds and cache keys.
inline std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace spechtvar
