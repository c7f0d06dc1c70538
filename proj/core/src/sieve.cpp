#include "artin/sieve.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include "artin/factor.hpp"
#include "artin/modmath.hpp"

namespace artin {
namespace {

using u64 = std::uint64_t;
using u32 = std::uint32_t;

inline u64 mulmod64(u64 a, u64 b, u64 q) noexcept {
  return static_cast<u64>(static_cast<u128>(a) * b % q);
}

u64 powmod64(u64 b, u64 e, u64 q) noexcept {
  u64 acc = 1 % q;
  b %= q;
  while (e != 0) {
    if (e & 1) acc = mulmod64(acc, b, q);
    b = mulmod64(b, b, q);
    e >>= 1;
  }
  return acc;
}

inline u64 inv_mod(u64 a, u64 q) noexcept { return powmod64(a, q - 2, q); }

// Reduced coefficients of f mod q, constant first, padded to degree 3.
std::array<u64, 4> reduce_mod(const Polynomial& f, u64 q) noexcept {
  std::array<u64, 4> r{0, 0, 0, 0};
  const auto cs = f.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const u64 mag = static_cast<u64>(abs_wide(cs[i]) % q);
    r[i] = cs[i] < 0 && mag != 0 ? q - mag : mag;
  }
  return r;
}

// Roots of the monic quadratic x^2 + b x + c over F_q (q odd prime).
void monic_quadratic_roots(u64 b, u64 c, u64 q, std::vector<u64>& out) {
  const u64 disc = (mulmod64(b, b, q) + 4 * (q - c) % q) % q;
  const auto s = sqrt_mod_prime(disc, q);
  if (!s) return;
  const u64 half = inv_mod(2 % q, q);
  out.push_back(mulmod64((q - b + *s) % q, half, q));
  if (*s != 0) out.push_back(mulmod64((2 * q - b - *s) % q, half, q));
}

// --- degree-3 roots over F_q via the Frobenius gcd -----------------------

// residues mod the monic cubic x^3 + m2 x^2 + m1 x + m0
using Poly3 = std::array<u64, 3>;

Poly3 polmulmod(const Poly3& a, const Poly3& b, const std::array<u64, 3>& m,
                u64 q) noexcept {
  u64 c[5] = {};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      c[i + j] = static_cast<u64>((static_cast<u128>(a[i]) * b[j] + c[i + j]) % q);
  for (int k = 4; k >= 3; --k) {
    const u64 lead = c[k];
    if (lead == 0) continue;
    c[k] = 0;
    for (int d = 0; d < 3; ++d) {
      const u64 sub = mulmod64(lead, m[d], q);
      c[k - 3 + d] = (c[k - 3 + d] + q - sub) % q;
    }
  }
  return {c[0], c[1], c[2]};
}

Poly3 polpowmod(Poly3 base, u64 e, const std::array<u64, 3>& m, u64 q) noexcept {
  Poly3 acc = {1, 0, 0};
  while (e != 0) {
    if (e & 1) acc = polmulmod(acc, base, m, q);
    base = polmulmod(base, base, m, q);
    e >>= 1;
  }
  return acc;
}

// gcd over F_q[x]; inputs constant-first, result monic.
std::vector<u64> polgcd(std::vector<u64> a, std::vector<u64> b, u64 q) {
  const auto trim = [](std::vector<u64>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    const u64 lead_inv = inv_mod(b.back(), q);
    while (a.size() >= b.size()) {
      const u64 factor = mulmod64(a.back(), lead_inv, q);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        const u64 sub = mulmod64(factor, b[i], q);
        a[shift + i] = (a[shift + i] + q - sub) % q;
      }
      trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty() && a.back() != 1) {
    const u64 inv = inv_mod(a.back(), q);
    for (auto& c : a) c = mulmod64(c, inv, q);
  }
  return a;
}

std::vector<u64> cubic_roots_frobenius(const std::array<u64, 4>& c, u64 q) {
  const u64 inv = inv_mod(c[3], q);
  const std::array<u64, 3> m = {mulmod64(c[0], inv, q), mulmod64(c[1], inv, q),
                                mulmod64(c[2], inv, q)};
  // g = gcd(x^q - x, f) is the product of the distinct linear factors.
  Poly3 xq = polpowmod({0, 1, 0}, q, m, q);
  xq[1] = (xq[1] + q - 1) % q;
  std::vector<u64> g =
      polgcd({xq[0], xq[1], xq[2]}, {m[0], m[1], m[2], 1}, q);

  std::vector<u64> roots;
  if (g.size() == 2) {  // single linear factor
    roots.push_back(mulmod64(q - g[0] % q, inv_mod(g[1], q), q));
  } else if (g.size() == 3) {
    monic_quadratic_roots(g[1], g[0], q, roots);
  } else if (g.size() == 4) {
    // f splits completely: separate with quadratic characters of x + a,
    // deterministic shift sequence for reproducibility.
    for (u64 a = 0; roots.empty() && a < q; ++a) {
      Poly3 t = polpowmod({a, 1, 0}, (q - 1) / 2, m, q);
      t[0] = (t[0] + q - 1) % q;
      auto h = polgcd({t[0], t[1], t[2]}, {m[0], m[1], m[2], 1}, q);
      if (h.size() == 2) {
        const u64 r1 = mulmod64(q - h[0] % q, inv_mod(h[1], q), q);
        // remaining quadratic from root sum/product of the monic cubic:
        // r1 + r2 + r3 = -m2, r1 r2 r3 = -m0
        const u64 sum23 = (2 * q - m[2] - r1) % q;
        const u64 prod23 = mulmod64((q - m[0]) % q, inv_mod(r1, q), q);
        roots.push_back(r1);
        monic_quadratic_roots((q - sum23) % q, prod23, q, roots);
      } else if (h.size() == 3) {
        monic_quadratic_roots(h[1], h[0], q, roots);
        const u64 r3 = (3 * q - m[2] - roots[0] - roots[1]) % q;
        roots.push_back(r3);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

std::optional<u64> sqrt_mod_prime(u64 a, u64 q) {
  a %= q;
  if (q == 2) return a;
  if (a == 0) return 0;
  if (powmod64(a, (q - 1) / 2, q) != 1) return std::nullopt;
  if ((q & 3) == 3) return powmod64(a, (q + 1) / 4, q);
  u64 s = q - 1;
  int e = 0;
  while ((s & 1) == 0) {
    s >>= 1;
    ++e;
  }
  u64 z = 2;
  while (powmod64(z, (q - 1) / 2, q) != q - 1) ++z;
  u64 c = powmod64(z, s, q);
  u64 x = powmod64(a, (s + 1) / 2, q);
  u64 t = powmod64(a, s, q);
  int r = e;
  while (t != 1) {
    u64 tt = t;
    int i = 0;
    while (tt != 1) {
      tt = mulmod64(tt, tt, q);
      ++i;
    }
    u64 b = c;
    for (int j = 0; j < r - i - 1; ++j) b = mulmod64(b, b, q);
    x = mulmod64(x, b, q);
    c = mulmod64(b, b, q);
    t = mulmod64(t, c, q);
    r = i;
  }
  return x;
}

std::vector<u64> poly_roots_mod_q(const Polynomial& f, u64 q) {
  const auto c = reduce_mod(f, q);
  int deg = 3;
  while (deg > 0 && c[deg] == 0) --deg;

  if (deg == 0) {
    if (c[0] != 0) return {};
    std::vector<u64> all(q);
    for (u64 r = 0; r < q; ++r) all[r] = r;
    return all;
  }
  if (q == 2 || (deg == 3 && q < (1 << 16))) {
    std::vector<u64> roots;
    for (u64 r = 0; r < q; ++r) {
      u64 v = 0;
      for (int i = deg; i >= 0; --i) v = (mulmod64(v, r, q) + c[i]) % q;
      if (v == 0) roots.push_back(r);
    }
    return roots;
  }
  if (deg == 1) return {mulmod64(q - c[0] % q, inv_mod(c[1], q), q)};
  if (deg == 2) {
    std::vector<u64> roots;
    const u64 inv_a = inv_mod(c[2], q);
    monic_quadratic_roots(mulmod64(c[1], inv_a, q), mulmod64(c[0], inv_a, q), q,
                          roots);
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  return cubic_roots_frobenius(c, q);
}

std::uint32_t SieveSegment::survivor_count() const noexcept {
  std::uint32_t count = 0;
  for (const u64 word : mask) count += static_cast<u32>(std::popcount(word));
  return count;
}

PolySieve::PolySieve(Polynomial f, std::uint32_t bound)
    : f_(std::move(f)), bound_(bound) {
  if (bound_ < 2) return;
  for (const u32 q : primes_up_to(bound_ + 1)) {
    auto roots = poly_roots_mod_q(f_, q);
    if (roots.empty()) continue;
    if (roots.size() == q) {
      content_primes_.push_back(q);
      continue;
    }
    primes_.push_back(q);
    roots_.push_back(std::move(roots));
  }
}

namespace {

// Whether some integer n in [begin, end] can have |f(n)| <= bound, decided
// exactly by splitting the window at (brackets of) the critical points of f
// and testing each monotone piece's value range. Conservative true on any
// arithmetic overflow.
bool may_contain_small_values(const Polynomial& f, u64 begin, u64 end,
                              u32 bound) {
  const auto cs = f.coefficients();
  const i128 c1 = cs[1];
  const i128 c2 = cs.size() > 2 ? cs[2] : 0;
  const i128 c3 = cs.size() > 3 ? cs[3] : 0;

  std::vector<u64> points{begin, end};
  const auto add_near = [&](i128 x) {
    for (i128 d = -1; d <= 1; ++d) {
      const i128 v = x + d;
      if (v >= static_cast<i128>(begin) && v <= static_cast<i128>(end))
        points.push_back(static_cast<u64>(v));
    }
  };
  if (c3 == 0) {
    if (c2 != 0) add_near(-c1 / (2 * c2));
  } else {
    // f' = 3 c3 x^2 + 2 c2 x + c1; bracket its real roots
    i128 disc, t;
    if (__builtin_mul_overflow(c2, c2, &t)) return true;
    if (__builtin_mul_overflow(static_cast<i128>(4), t, &disc)) return true;
    i128 u;
    if (__builtin_mul_overflow(static_cast<i128>(12) * c3, c1, &u)) return true;
    if (__builtin_sub_overflow(disc, u, &disc)) return true;
    if (disc >= 0) {
      const i128 s = static_cast<i128>(isqrt(static_cast<u128>(disc)));
      add_near((-2 * c2 - s) / (6 * c3));
      add_near((-2 * c2 + s) / (6 * c3));
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<i128> values;
  values.reserve(points.size());
  for (const u64 p : points) {
    try {
      values.push_back(f.eval(p));
    } catch (const std::range_error&) {
      return true;
    }
  }
  const i128 b = static_cast<i128>(bound);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const i128 lo = std::min(values[i], values[i + 1]);
    const i128 hi = std::max(values[i], values[i + 1]);
    if (lo <= b && hi >= -b) return true;
  }
  return values.size() == 1 && values[0] >= -b && values[0] <= b;
}

}  // namespace

SieveSegment PolySieve::segment(std::uint64_t n_start, std::uint32_t length) const {
  if (length == 0 || length > (1u << 26))
    throw std::invalid_argument("PolySieve::segment: length must be in [1, 2^26]");
  SieveSegment seg;
  seg.n_start = n_start;
  seg.length = length;
  seg.small_prime_bound = bound_;
  seg.mask.assign((length + 63) / 64, ~static_cast<u64>(0));
  if (length & 63)  // trim phantom tail bits
    seg.mask.back() = (static_cast<u64>(1) << (length & 63)) - 1;
  if (bound_ < 2) return seg;

  const bool small_vals =
      may_contain_small_values(f_, n_start, n_start + length - 1, bound_);
  const auto strike = [&](u64 i, u64 q) {
    if (small_vals && abs_wide(f_.eval(n_start + i)) == q) return;
    seg.mask[i >> 6] &= ~(static_cast<u64>(1) << (i & 63));
  };

  for (const u32 q : content_primes_)
    for (u64 i = 0; i < length; ++i) strike(i, q);

  for (std::size_t k = 0; k < primes_.size(); ++k) {
    const u64 q = primes_[k];
    const u64 rem = n_start % q;
    for (const u64 r : roots_[k]) {
      const u64 first = r >= rem ? r - rem : q - rem + r;
      for (u64 i = first; i < length; i += q) strike(i, q);
    }
  }
  return seg;
}

SieveSegment sieve_segment(const Polynomial& f, std::uint64_t n_start,
                           std::uint32_t length, std::uint32_t bound) {
  return PolySieve(f, bound).segment(n_start, length);
}

}  // namespace artin
