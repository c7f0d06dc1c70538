#include "artin/modmath.hpp"

#include <algorithm>
#include <utility>

namespace artin {

u128 mulmod(u128 a, u128 b, u128 m) {
  if (m < 2) throw std::domain_error("mulmod: modulus must be >= 2");
  if (a >= m) a %= m;
  if (b >= m) b %= m;
  if (((a | b) >> 64) == 0) return a * b % m;
  // Split a at 36 bits: a*b = (a_hi*b)*2^36 + a_lo*b. For m < 2^82 each
  // intermediate stays below 2^128 and the reduction is exact.
  const u128 a_hi = a >> 36;
  const u128 a_lo = a & ((static_cast<u128>(1) << 36) - 1);
  const u128 part = a_hi * b % m;
  return ((part << 36) + a_lo * b) % m;
}

u128 powmod(u128 b, u128 e, u128 m) {
  if (m < 2) throw std::domain_error("powmod: modulus must be >= 2");
  if (b >= m) b %= m;
  if (e == 0) return 1;
  if (m & 1) return Montgomery(m).powmod(b, e);
  u128 acc = 1;
  while (e != 0) {
    if (e & 1) acc = mulmod(acc, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return acc;
}

u128 gcd(u128 a, u128 b) noexcept {
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = std::min(countr_zero(a), countr_zero(b));
  a >>= countr_zero(a);
  for (;;) {
    b >>= countr_zero(b);
    if (a > b) std::swap(a, b);
    b -= a;
    if (b == 0) break;
  }
  return a << shift;
}

int jacobi(i128 a_in, u128 n) {
  if (n == 0 || (n & 1) == 0)
    throw std::domain_error("jacobi: n must be odd and positive");
  int sign = 1;
  u128 a;
  if (a_in < 0) {
    a = abs_wide(a_in) % n;
    if ((n & 3) == 3) sign = -sign;
  } else {
    a = static_cast<u128>(a_in) % n;
  }
  u128 num = a, den = n;
  while (num != 0) {
    const int tz = countr_zero(num);
    num >>= tz;
    if (tz & 1) {
      const u128 r = den & 7;
      if (r == 3 || r == 5) sign = -sign;
    }
    std::swap(num, den);
    if ((num & 3) == 3 && (den & 3) == 3) sign = -sign;
    num %= den;
  }
  return den == 1 ? sign : 0;
}

Montgomery::Montgomery(u128 m) : m_(m) {
  if (m < 3 || (m & 1) == 0)
    throw std::invalid_argument("Montgomery: modulus must be odd and >= 3");
  // Newton iteration for m^-1 mod 2^128: m is its own inverse mod 8.
  u128 inv = m;
  for (int i = 0; i < 6; ++i) inv *= 2 - m * inv;
  neg_inv_ = static_cast<u128>(0) - inv;
  r1_ = (static_cast<u128>(0) - m) % m;  // 2^128 mod m
  r2_ = mulmod(r1_, r1_, m);             // 2^256 mod m, exact for m < 2^82
}

}  // namespace artin
