// Overflow-free modular arithmetic on 128-bit residues.
//
// Public contract: every modulus m satisfies 2 <= m < 2^72. The
// implementations are exact well beyond that (mulmod to 2^82, Montgomery to
// 2^82 for odd moduli), so the contract carries headroom rather than a cliff.
#pragma once

#include <stdexcept>

#include "artin/wide.hpp"

namespace artin {

struct u256 {
  u128 lo, hi;
};

// Full 128x128 -> 256-bit product.
inline u256 mul_wide(u128 a, u128 b) noexcept {
  const auto a0 = static_cast<std::uint64_t>(a);
  const auto a1 = static_cast<std::uint64_t>(a >> 64);
  const auto b0 = static_cast<std::uint64_t>(b);
  const auto b1 = static_cast<std::uint64_t>(b >> 64);
  const u128 ll = static_cast<u128>(a0) * b0;
  const u128 lh = static_cast<u128>(a0) * b1;
  const u128 hl = static_cast<u128>(a1) * b0;
  const u128 hh = static_cast<u128>(a1) * b1;
  const u128 mid1 = lh + (ll >> 64);                       // cannot overflow
  const u128 mid2 = hl + static_cast<std::uint64_t>(mid1); // cannot overflow
  u256 r;
  r.lo = (mid2 << 64) | static_cast<std::uint64_t>(ll);
  r.hi = hh + (mid1 >> 64) + (mid2 >> 64);
  return r;
}

// (a*b) mod m, exact for m < 2^82. Throws std::domain_error for m < 2.
u128 mulmod(u128 a, u128 b, u128 m);

// b^e mod m by square-and-multiply; e = 0 yields 1. Uses Montgomery
// reduction for odd m. Throws std::domain_error for m < 2.
u128 powmod(u128 b, u128 e, u128 m);

// Binary gcd; gcd(0,0) = 0.
u128 gcd(u128 a, u128 b) noexcept;

// Jacobi symbol (a|n) for odd n >= 1, negative a handled through
// (-1|n) = (-1)^((n-1)/2). Throws std::domain_error for even or zero n.
int jacobi(i128 a, u128 n);

// Montgomery arithmetic mod an odd m, R = 2^128. Exact for odd 3 <= m < 2^82.
class Montgomery {
 public:
  explicit Montgomery(u128 m);

  u128 modulus() const noexcept { return m_; }
  u128 one() const noexcept { return r1_; }  // Montgomery form of 1

  u128 to_mont(u128 a) const noexcept { return mul(a, r2_); }
  u128 from_mont(u128 a) const noexcept { return redc({a, 0}); }

  u128 mul(u128 a, u128 b) const noexcept { return redc(mul_wide(a, b)); }
  u128 sqr(u128 a) const noexcept { return mul(a, a); }
  u128 add(u128 a, u128 b) const noexcept {
    const u128 s = a + b;
    return s >= m_ ? s - m_ : s;
  }
  u128 sub(u128 a, u128 b) const noexcept { return a >= b ? a - b : a + m_ - b; }
  // division by 2 in the residue ring (m odd)
  u128 half(u128 a) const noexcept { return (a & 1) ? ((a + m_) >> 1) : (a >> 1); }

  // Montgomery-domain exponentiation: base and result in Montgomery form.
  u128 pow(u128 base, u128 e) const noexcept {
    u128 acc = r1_;
    while (e != 0) {
      if (e & 1) acc = mul(acc, base);
      base = sqr(base);
      e >>= 1;
    }
    return acc;
  }

  // Plain-domain convenience: b^e mod m for b < m.
  u128 powmod(u128 b, u128 e) const noexcept {
    return from_mont(pow(to_mont(b), e));
  }

 private:
  u128 redc(u256 t) const noexcept {
    const u128 mm = t.lo * neg_inv_;
    const u256 mmm = mul_wide(mm, m_);
    const u128 lo = t.lo + mmm.lo;
    const u128 carry = lo < t.lo ? 1 : 0;
    const u128 res = t.hi + mmm.hi + carry;  // < 2m, no overflow for m < 2^126
    return res >= m_ ? res - m_ : res;
  }

  u128 m_, neg_inv_, r1_, r2_;
};

}  // namespace artin
