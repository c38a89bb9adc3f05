//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_HASH_H_
#define SYNTHROUTE_HASH_H_

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace synthroute {

// 64-bit FNV-1a. Values are folded little-endian byte by byte so digests do
// not depend on host endianness.
class Fnv1a {
public:
  static constexpr std::uint64_t kOffset = 0xcbf29ce484222325ULL;
  static constexpr std::uint64_t kPrime = 0x100000001b3ULL;

  constexpr Fnv1a &add_byte(std::uint8_t b) {
    state_ ^= b;
    state_ *= kPrime;
    return *this;
  }

  constexpr Fnv1a &add(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      add_byte(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    return *this;
  }

  constexpr Fnv1a &add(std::string_view s) {
    for (char c: s) {
      add_byte(static_cast<std::uint8_t>(c));
    }
    return *this;
  }

  constexpr std::uint64_t digest() const { return state_; }

private:
  std::uint64_t state_ = kOffset;
};

constexpr std::uint64_t fnv1a(std::string_view s) {
  return Fnv1a().add(s).digest();
}

// Sixteen lowercase hex digits of fnv1a(s).
inline std::string fnv1a_hex(std::string_view s) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(s)));
  return buf;
}

}  // namespace synthroute

#endif  // SYNTHROUTE_HASH_H_
