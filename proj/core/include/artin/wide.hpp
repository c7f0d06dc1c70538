// 128-bit integer support: decimal conversion, integer square root, helpers.
//
// Residues and polynomial values in this project reach ~2^68; all kernels
// carry them in unsigned __int128 with enough headroom that every public
// contract below 2^72 is exact.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace artin {

using u128 = unsigned __int128;
using i128 = __int128;

// Decimal rendering, unbounded width (up to 39 digits).
std::string to_string(u128 v);
std::string to_string(i128 v);

// Strict decimal parse; rejects empty strings, stray characters and
// anything that does not fit the type. An optional leading '-' is accepted
// by the signed variant only.
std::optional<u128> parse_u128(std::string_view s);
std::optional<i128> parse_i128(std::string_view s);

inline u128 abs_wide(i128 v) noexcept {
  return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
}

inline int bit_width(u128 v) noexcept {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  if (hi != 0) return 128 - __builtin_clzll(hi);
  const auto lo = static_cast<std::uint64_t>(v);
  return lo == 0 ? 0 : 64 - __builtin_clzll(lo);
}

inline int countr_zero(u128 v) noexcept {
  const auto lo = static_cast<std::uint64_t>(v);
  if (lo != 0) return __builtin_ctzll(lo);
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  return hi == 0 ? 128 : 64 + __builtin_ctzll(hi);
}

// Floor of the square root.
u128 isqrt(u128 n) noexcept;

inline bool is_perfect_square(u128 n) noexcept {
  const u128 r = isqrt(n);
  return r * r == n;
}

}  // namespace artin
