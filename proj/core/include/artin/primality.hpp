// Deterministic-quality primality testing for candidates up to 2^72.
//
// Policy:
//   n < 2^16        trial division by primes < 256 decides outright
//   n < 2^64        Miller-Rabin with the first 12 primes as bases
//                   (a proven witness set for this range)
//   n >= 2^64       BPSW (strong base-2 + strong Lucas, Selfridge
//                   parameters) plus 8 extra Miller-Rabin rounds whose
//                   bases are a pure function of n
//
// Prime verdicts below 2^64 are unconditional; above, the verdict records
// that it rests on BPSW (no counterexample known) plus the extra rounds.
#pragma once

#include "artin/wide.hpp"

namespace artin {

enum class Verdict { Composite, Prime };
enum class PrimalityMethod { SmallSieve, DeterministicMR, BpswPlusMR };

struct PrimalityResult {
  Verdict verdict;
  PrimalityMethod method;
  bool prime() const noexcept { return verdict == Verdict::Prime; }
};

PrimalityResult primality(u128 n);

inline bool is_prime(u128 n) { return primality(n).prime(); }

namespace detail {

// Strong probable-prime test to the given base; n odd, n > 2.
bool strong_probable_prime(u128 n, u128 base);

// Strong Lucas test with Selfridge's parameter choice; n odd, n >= 3.
bool strong_lucas_selfridge(u128 n);

}  // namespace detail
}  // namespace artin
