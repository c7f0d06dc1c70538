// The core object of the toolkit: streaming scans of f(0), f(1), ... that
// classify each prime value as having g for a primitive root or not, and
// the run statistics r (initial all-primitive-root positions) and c
// (distinct primes among them).
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artin/factor.hpp"
#include "artin/polynomial.hpp"
#include "artin/wide.hpp"

namespace artin {

// The tested integer g with precomputed validity notes.
struct Base {
  i128 value = 0;
  bool is_unit = false;            // g in {-1, 0, 1}
  bool is_perfect_square = false;  // g = k^2 (never a primitive root mod p > 3)

  explicit Base(i128 g)
      : value(g),
        is_unit(g >= -1 && g <= 1),
        is_perfect_square(g >= 0 && is_perfect_square_wide(static_cast<u128>(g))) {}

 private:
  static bool is_perfect_square_wide(u128 v) noexcept {
    return artin::is_perfect_square(v);
  }
};

enum class PrStatus { PrimitiveRoot, NotPrimitiveRoot, DividesG };

struct ArtinEvent {
  std::uint64_t sequence_index = 0;  // 1-based position among primes not
                                     // dividing g; a DividesG event carries
                                     // the position it would have occupied
  std::uint64_t n = 0;
  u128 p = 0;
  PrStatus verdict = PrStatus::NotPrimitiveRoot;
  bool duplicate = false;  // p already appeared earlier in this scan
  bool operator==(const ArtinEvent&) const = default;
};

struct ScanCounts {
  std::uint64_t evaluated = 0;          // arguments n examined
  std::uint64_t prime = 0;              // n with |f(n)| prime
  std::uint64_t skipped_divides_g = 0;  // primes excluded for dividing g
  bool operator==(const ScanCounts&) const = default;
};

enum class Terminated { FailureFound, RangeExhausted };

struct RunReport {
  std::uint64_t r = 0;  // run length in sequence positions
  std::uint64_t c = 0;  // distinct primes among the first r positions
  std::optional<std::pair<std::uint64_t, u128>> first_failure;  // (n, p)
  std::uint64_t n_begin = 0, n_end = 0;  // half-open scan interval
  ScanCounts counts;
  Terminated terminated = Terminated::RangeExhausted;
  bool operator==(const RunReport&) const = default;
};

struct RunOptions {
  bool stop_on_failure = true;
  // Values f(n) <= 1 are skipped. With allow_negative set, negative values
  // contribute |f(n)| instead of being skipped.
  bool allow_negative = false;
  std::uint32_t sieve_bound = 100000;       // < 2 disables sieving
  std::uint64_t chunk_length = 1 << 20;     // scan/sieve segment size
  unsigned threads = 1;                     // 0 = hardware concurrency
  std::function<void(std::uint64_t done, std::uint64_t total)> progress;
};

using EventSink = std::function<void(const ArtinEvent&)>;

// True iff g is a primitive root mod p: g^((p-1)/q) != 1 for every distinct
// prime q | p-1. Requires fac.original == p-1 and gcd(g mod p, p) == 1
// (std::invalid_argument otherwise); p = 2 is vacuously true.
bool is_primitive_root(const Base& g, u128 p, const Factorization& fac);

// Exact order of g in (Z/p)^*, same preconditions.
u128 multiplicative_order(const Base& g, u128 p, const Factorization& fac);

// Scans n in [n_begin, n_end) ascending. Each n with |f(n)| >= 2 and prime
// produces one event; primes dividing g are recorded as DividesG and do not
// occupy sequence positions. r counts positions before the first
// NotPrimitiveRoot; c counts distinct primes among them. With
// stop_on_failure the scan halts at the first failure, otherwise the whole
// range is scanned and r/c still describe the initial run. Events arrive in
// n-order in a single consumer thread; reports are bit-identical for any
// thread count.
RunReport artin_run(const Base& g, const Polynomial& f, std::uint64_t n_begin,
                    std::uint64_t n_end, const RunOptions& options = {},
                    const EventSink& sink = {});

// --- record verification --------------------------------------------------

struct RecordInstance {
  std::string name;
  Polynomial f;
  i128 g;
  std::uint64_t expected_c;
  // expected interval (inclusive) of the prime-producing arguments, in the
  // coordinates of the depressed form when one exists (n = X + shift)
  std::uint64_t n_lo, n_hi;
};

// Built-in instances; lookup by name.
const std::vector<RecordInstance>& builtin_records();
std::optional<RecordInstance> find_record(std::string_view name);

enum class CheckStatus { Pass, Fail, Inconclusive };

struct VerificationCheck {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  RunReport run;            // the depressed-form (or direct) scan
  std::uint64_t shift = 0;  // 0 when no depressed form exists
  bool used_depressed_form = false;

  bool all_pass() const noexcept;
  bool inconclusive() const noexcept;
};

// Runs the scan in both the direct form (from X = 0) and the depressed form
// (from n = shift) when one exists, then checks:
//   (a) both forms yield identical prime sequences
//   (b) c equals expected_c
//   (c) every run prime's argument (depressed coordinates) lies in
//       [n_lo, n_hi]
//   (d) the first prime after the run fails the primitive-root test
//       (inconclusive when the scan window is exhausted without a failure)
VerificationReport verify_record(const RecordInstance& instance,
                                 const RunOptions& options = {});

// Scan slack beyond the expected interval when hunting the terminating
// failure.
inline constexpr std::uint64_t kVerifySlack = 100000;

}  // namespace artin
