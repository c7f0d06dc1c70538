// Segmented sieving of polynomial values: strike every argument n whose
// |f(n)| is divisible by a small prime q <= B, except where |f(n)| = q
// itself (those positions are genuine primes of the sequence and must
// survive).
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "artin/polynomial.hpp"
#include "artin/wide.hpp"

namespace artin {

// All r in [0,q) with f(r) == 0 (mod q); q prime below 2^32. Degree 1 by
// modular inverse, degree 2 via the discriminant and a modular square
// root, degree 3 by exhaustive scan below 2^16 and by gcd with the
// Frobenius polynomial x^q - x above. If f vanishes identically mod q,
// every residue is a root.
std::vector<std::uint64_t> poly_roots_mod_q(const Polynomial& f, std::uint64_t q);

// Square root of a mod an odd prime q (Tonelli-Shanks); nullopt when a is
// a non-residue.
std::optional<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t q);

struct SieveSegment {
  std::uint64_t n_start = 0;
  std::uint32_t length = 0;
  std::uint32_t small_prime_bound = 0;
  std::vector<std::uint64_t> mask;  // bit i set <=> n_start+i survives

  bool survives(std::uint32_t i) const noexcept {
    return (mask[i >> 6] >> (i & 63)) & 1;
  }
  std::uint32_t survivor_count() const noexcept;
};

// Root tables for one polynomial and bound, computed once and shared
// read-only across any number of segment producers.
class PolySieve {
 public:
  PolySieve(Polynomial f, std::uint32_t bound);

  const Polynomial& poly() const noexcept { return f_; }
  std::uint32_t bound() const noexcept { return bound_; }

  // length <= 2^26
  SieveSegment segment(std::uint64_t n_start, std::uint32_t length) const;

 private:
  Polynomial f_;
  std::uint32_t bound_;
  std::vector<std::uint32_t> primes_;
  std::vector<std::vector<std::uint64_t>> roots_;
  std::vector<std::uint32_t> content_primes_;  // q dividing every f(n)
};

// One-shot convenience wrapper.
SieveSegment sieve_segment(const Polynomial& f, std::uint64_t n_start,
                           std::uint32_t length, std::uint32_t bound);

}  // namespace artin
