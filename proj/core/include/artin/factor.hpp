// Complete integer factorization up to 2^72: trial division below 10^5,
// then recursive splitting with Brent's cycle-finding rho. Fully
// deterministic (fixed seed schedule), so results are identical across
// runs and thread counts.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "artin/wide.hpp"

namespace artin {

struct Factorization {
  struct Entry {
    u128 prime;
    std::uint32_t exponent;
    bool operator==(const Entry&) const = default;
  };
  std::vector<Entry> factors;  // primes strictly increasing, exponents >= 1
  u128 original = 0;

  // Recomputes prime^exponent over all entries.
  u128 reconstructed() const noexcept;
  bool operator==(const Factorization&) const = default;
};

class FactorizationError : public std::runtime_error {
 public:
  explicit FactorizationError(u128 n)
      : std::runtime_error("factorization failed for n = " + to_string(n)),
        value(n) {}
  u128 value;
};

// Complete factorization of n >= 1; n = 1 yields an empty list.
// Throws std::domain_error for n = 0, FactorizationError if the rho seed
// budget is ever exhausted.
Factorization factorize(u128 n);

// One nontrivial divisor of an odd composite n >= 9 via Brent's variant of
// Pollard rho with polynomial x^2 + c, x0 = 2, c = 1 + 2*seed_index.
// Retries with successive seeds; after 64 attempts throws
// FactorizationError carrying n.
u128 pollard_brent(u128 n, unsigned seed_index);

// Primes below the given limit (simple sieve of Eratosthenes).
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

// Shared immutable table of primes below 10^5 (built on first use).
std::span<const std::uint32_t> small_primes();

}  // namespace artin
