#include "artin/primality.hpp"

#include <array>
#include <cstdint>
#include <iterator>

#include "artin/modmath.hpp"

namespace artin {
namespace {

struct TrialPrime {
  std::uint32_t p;
  std::uint32_t r64;  // 2^64 mod p
};

constexpr TrialPrime make_trial(std::uint32_t p) {
  std::uint64_t r = static_cast<std::uint64_t>(-1) % p + 1;
  if (r == p) r = 0;
  return {p, static_cast<std::uint32_t>(r)};
}

// primes below 256
constexpr std::uint32_t kSmallPrimes[] = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,
    47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107,
    109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
    191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251};

constexpr auto make_trial_table() {
  std::array<TrialPrime, std::size(kSmallPrimes)> t{};
  for (std::size_t i = 0; i < std::size(kSmallPrimes); ++i)
    t[i] = make_trial(kSmallPrimes[i]);
  return t;
}
constexpr auto kTrialTable = make_trial_table();

inline std::uint32_t mod_u32(u128 n, const TrialPrime& t) noexcept {
  const std::uint64_t hi = static_cast<std::uint64_t>(n >> 64) % t.p;
  const std::uint64_t lo = static_cast<std::uint64_t>(n) % t.p;
  return static_cast<std::uint32_t>((hi * t.r64 + lo) % t.p);
}

// Witness set proven for all n < 2^64 (first twelve primes).
constexpr std::uint32_t kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// One strong probable-prime round with a prepared Montgomery context.
bool sprp_round(const Montgomery& mt, u128 d, int s, u128 base) {
  const u128 n = mt.modulus();
  base %= n;
  if (base == 0) return true;
  const u128 one = mt.one();
  const u128 minus_one = n - one;
  u128 x = mt.pow(mt.to_mont(base), d);
  if (x == one || x == minus_one) return true;
  for (int i = 1; i < s; ++i) {
    x = mt.sqr(x);
    if (x == minus_one) return true;
    if (x == one) return false;  // nontrivial square root of 1
  }
  return false;
}

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

namespace detail {

bool strong_probable_prime(u128 n, u128 base) {
  const Montgomery mt(n);
  const int s = countr_zero(n - 1);
  const u128 d = (n - 1) >> s;
  return sprp_round(mt, d, s, base);
}

bool strong_lucas_selfridge(u128 n) {
  // Selfridge parameter search: D = 5, -7, 9, -11, ... with (D|n) = -1.
  i128 d_param = 5;
  for (int k = 0;; ++k) {
    const int j = jacobi(d_param, n);
    if (j == -1) break;
    if (j == 0) {
      // |D| shares a factor with n; composite unless n is |D| itself,
      // in which case keep searching (a prime n finds a -1 later).
      if (abs_wide(d_param) != n) return false;
    }
    if (k == 6 && is_perfect_square(n)) return false;  // no -1 exists
    d_param = d_param > 0 ? -(d_param + 2) : -(d_param - 2);
  }
  const i128 q_param = (1 - d_param) / 4;  // P = 1

  const Montgomery mt(n);
  const auto to_residue = [&](i128 v) {
    const u128 mag = abs_wide(v) % n;
    return mt.to_mont(v < 0 && mag != 0 ? n - mag : mag);
  };
  const u128 dm = to_residue(d_param);
  const u128 qm = to_residue(q_param);

  const u128 np1 = n + 1;
  const int s = countr_zero(np1);
  const u128 dd = np1 >> s;

  // Binary chain for U_dd, V_dd, Q^dd starting from index 1.
  u128 u = mt.one(), v = mt.one(), qk = qm;
  for (int i = bit_width(dd) - 2; i >= 0; --i) {
    // index doubling: U_2m = U*V, V_2m = V^2 - 2Q^m
    u = mt.mul(u, v);
    v = mt.sub(mt.sqr(v), mt.add(qk, qk));
    qk = mt.sqr(qk);
    if ((dd >> i) & 1) {
      // index +1 with P = 1: U' = (U+V)/2, V' = (D*U + V)/2
      const u128 un = mt.half(mt.add(u, v));
      const u128 vn = mt.half(mt.add(mt.mul(dm, u), v));
      u = un;
      v = vn;
      qk = mt.mul(qk, qm);
    }
  }
  if (u == 0 || v == 0) return true;
  for (int r = 1; r < s; ++r) {
    v = mt.sub(mt.sqr(v), mt.add(qk, qk));
    qk = mt.sqr(qk);
    if (v == 0) return true;
  }
  return false;
}

}  // namespace detail

PrimalityResult primality(u128 n) {
  if (n < 2) return {Verdict::Composite, PrimalityMethod::SmallSieve};
  for (const auto& t : kTrialTable) {
    if (n == t.p) return {Verdict::Prime, PrimalityMethod::SmallSieve};
    if (mod_u32(n, t) == 0)
      return {Verdict::Composite, PrimalityMethod::SmallSieve};
  }
  if (n < 256 * 256) return {Verdict::Prime, PrimalityMethod::SmallSieve};

  const int s = countr_zero(n - 1);
  const u128 d = (n - 1) >> s;

  if ((n >> 64) == 0) {
    const Montgomery mt(n);
    for (const std::uint32_t b : kMrBases)
      if (!sprp_round(mt, d, s, b))
        return {Verdict::Composite, PrimalityMethod::DeterministicMR};
    return {Verdict::Prime, PrimalityMethod::DeterministicMR};
  }

  const Montgomery mt(n);
  if (!sprp_round(mt, d, s, 2))
    return {Verdict::Composite, PrimalityMethod::BpswPlusMR};
  if (!detail::strong_lucas_selfridge(n))
    return {Verdict::Composite, PrimalityMethod::BpswPlusMR};
  // extra rounds with bases derived deterministically from n
  std::uint64_t state = static_cast<std::uint64_t>(n) ^
                        (static_cast<std::uint64_t>(n >> 64) * 0x9e3779b97f4a7c15ULL);
  for (int round = 0; round < 8; ++round) {
    u128 base = splitmix64(state);
    if (base < 3) base += 3;
    if (!sprp_round(mt, d, s, base))
      return {Verdict::Composite, PrimalityMethod::BpswPlusMR};
  }
  return {Verdict::Prime, PrimalityMethod::BpswPlusMR};
}

}  // namespace artin
