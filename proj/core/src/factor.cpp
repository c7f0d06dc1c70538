#include "artin/factor.hpp"

#include <algorithm>
#include <map>

#include "artin/modmath.hpp"
#include "artin/primality.hpp"

namespace artin {
namespace {

constexpr std::uint32_t kTrialBound = 100000;
constexpr unsigned kSeedBudget = 64;

struct TrialTables {
  std::vector<std::uint32_t> primes;
  std::vector<std::uint64_t> r64;  // 2^64 mod p, aligned with primes
};

const TrialTables& trial_tables() {
  static const TrialTables tables = [] {
    TrialTables t;
    t.primes = primes_up_to(kTrialBound);
    t.r64.reserve(t.primes.size());
    for (const std::uint32_t p : t.primes)
      t.r64.push_back((static_cast<std::uint64_t>(-1) % p + 1) % p);
    return t;
  }();
  return tables;
}

inline std::uint32_t mod_u32(u128 n, std::uint32_t p, std::uint64_t r64) noexcept {
  const std::uint64_t hi = static_cast<std::uint64_t>(n >> 64) % p;
  const std::uint64_t lo = static_cast<std::uint64_t>(n) % p;
  return static_cast<std::uint32_t>((hi * r64 + lo) % p);
}

}  // namespace

u128 Factorization::reconstructed() const noexcept {
  u128 prod = 1;
  for (const auto& [prime, exponent] : factors)
    for (std::uint32_t i = 0; i < exponent; ++i) prod *= prime;
  return prod;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 3) return out;
  std::vector<bool> composite(limit, false);
  for (std::uint32_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j < limit; j += i)
      composite[static_cast<std::uint32_t>(j)] = true;
  }
  return out;
}

std::span<const std::uint32_t> small_primes() { return trial_tables().primes; }

u128 pollard_brent(u128 n, unsigned seed_index) {
  if ((n & 1) == 0 || n < 9)
    throw std::invalid_argument("pollard_brent: n must be odd and composite");
  const Montgomery mt(n);
  constexpr std::uint64_t kBatch = 128;
  constexpr std::uint64_t kBacktrackCap = 1 << 16;

  for (unsigned attempt = 0; attempt < kSeedBudget; ++attempt) {
    const u128 c_plain = (1 + 2 * static_cast<u128>(seed_index + attempt)) % n;
    const u128 c = mt.to_mont(c_plain);
    const auto step = [&](u128 v) { return mt.add(mt.sqr(v), c); };

    u128 y = mt.to_mont(2 % n), q = mt.one();
    u128 x = y, ys = y, g = 1;
    std::uint64_t r = 1;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const std::uint64_t lim = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = step(y);
          q = mt.mul(q, y > x ? y - x : x - y);
        }
        // n odd, so gcd with R = 2^128 is 1 and Montgomery forms share
        // exactly the factors of the plain values.
        g = gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      for (std::uint64_t i = 0; g == 1 && i < kBacktrackCap; ++i) {
        ys = step(ys);
        g = gcd(ys > x ? ys - x : x - ys, n);
      }
    }
    if (g > 1 && g != n) return g;
  }
  throw FactorizationError(n);
}

Factorization factorize(u128 n) {
  if (n == 0) throw std::domain_error("factorize: n must be >= 1");
  Factorization out;
  out.original = n;
  if (n == 1) return out;

  std::map<u128, std::uint32_t> counts;
  u128 m = n;
  const auto& tables = trial_tables();
  for (std::size_t i = 0; i < tables.primes.size() && m > 1; ++i) {
    const std::uint32_t p = tables.primes[i];
    if (static_cast<u128>(p) * p > m) break;
    if (mod_u32(m, p, tables.r64[i]) != 0) continue;
    std::uint32_t e = 0;
    do {
      m /= p;
      ++e;
    } while (mod_u32(m, p, tables.r64[i]) == 0);
    counts[p] += e;
  }

  std::vector<u128> pending;
  if (m > 1) pending.push_back(m);
  while (!pending.empty()) {
    const u128 v = pending.back();
    pending.pop_back();
    if (v == 1) continue;
    if (is_prime(v)) {
      ++counts[v];
      continue;
    }
    const u128 root = isqrt(v);
    if (root * root == v) {
      pending.push_back(root);
      pending.push_back(root);
      continue;
    }
    const u128 d = pollard_brent(v, 0);
    pending.push_back(d);
    pending.push_back(v / d);
  }

  out.factors.reserve(counts.size());
  for (const auto& [prime, exponent] : counts)
    out.factors.push_back({prime, exponent});
  return out;
}

}  // namespace artin
