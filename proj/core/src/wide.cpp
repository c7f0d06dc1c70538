#include "artin/wide.hpp"

#include <cmath>
#include <limits>

namespace artin {

std::string to_string(u128 v) {
  if (v == 0) return "0";
  char buf[40];
  int pos = 40;
  while (v != 0) {
    buf[--pos] = static_cast<char>('0' + static_cast<unsigned>(v % 10));
    v /= 10;
  }
  return std::string(buf + pos, 40 - pos);
}

std::string to_string(i128 v) {
  if (v < 0) return "-" + to_string(abs_wide(v));
  return to_string(static_cast<u128>(v));
}

std::optional<u128> parse_u128(std::string_view s) {
  if (s.empty() || s.size() > 39) return std::nullopt;
  constexpr u128 kMax = ~static_cast<u128>(0);
  u128 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    const unsigned d = static_cast<unsigned>(c - '0');
    if (v > (kMax - d) / 10) return std::nullopt;
    v = v * 10 + d;
  }
  return v;
}

std::optional<i128> parse_i128(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  const auto mag = parse_u128(s);
  if (!mag) return std::nullopt;
  constexpr u128 kMaxPos = (~static_cast<u128>(0)) >> 1;  // 2^127 - 1
  if (neg) {
    if (*mag > kMaxPos + 1) return std::nullopt;
    if (*mag == kMaxPos + 1) return std::numeric_limits<i128>::min();
    return -static_cast<i128>(*mag);
  }
  if (*mag > kMaxPos) return std::nullopt;
  return static_cast<i128>(*mag);
}

u128 isqrt(u128 n) noexcept {
  if (n == 0) return 0;
  // long double gives ~64 mantissa bits on x86; correct by search.
  u128 x = static_cast<u128>(sqrtl(static_cast<long double>(n)));
  if (x == 0) x = 1;
  // x*x can overflow near 2^64; compare via division instead.
  while (x > n / x) --x;
  while ((x + 1) <= n / (x + 1)) ++x;
  return x;
}

}  // namespace artin
