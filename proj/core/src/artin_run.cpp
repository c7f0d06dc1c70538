#include "artin/artin_run.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "artin/modmath.hpp"
#include "artin/primality.hpp"
#include "artin/sieve.hpp"

namespace artin {
namespace {

// g reduced to [0, p)
u128 reduce_base(i128 g, u128 p) noexcept {
  const u128 mag = abs_wide(g) % p;
  return g < 0 && mag != 0 ? p - mag : mag;
}

void check_pr_preconditions(const Base& g, u128 p, const Factorization& fac) {
  if (fac.original != p - 1)
    throw std::invalid_argument(
        "primitive-root test: factorization is not of p-1");
  if (p != 2 && gcd(reduce_base(g.value, p), p) != 1)
    throw std::invalid_argument("primitive-root test: g shares a factor with p");
}

// Verdict for a prime p; assumes p prime.
PrStatus classify(const Base& g, u128 p) {
  if (g.value == 0) return PrStatus::DividesG;
  const u128 gm = reduce_base(g.value, p);
  if (gm == 0) return PrStatus::DividesG;
  if (p == 2) return PrStatus::PrimitiveRoot;
  // A primitive root must be a quadratic non-residue; the Jacobi symbol is
  // far cheaper than factoring p-1, and failures are exactly where scans
  // terminate.
  if (jacobi(static_cast<i128>(gm), p) == 1) return PrStatus::NotPrimitiveRoot;
  const Factorization fac = factorize(p - 1);
  const Montgomery mt(p);
  const u128 base_m = mt.to_mont(gm);
  const u128 one = mt.one();
  for (const auto& [q, exponent] : fac.factors)
    if (mt.pow(base_m, (p - 1) / q) == one) return PrStatus::NotPrimitiveRoot;
  return PrStatus::PrimitiveRoot;
}

struct PrimeHit {
  std::uint64_t n;
  u128 p;
  PrStatus verdict;
};

struct ChunkOutcome {
  std::uint64_t begin = 0, end = 0;
  std::vector<PrimeHit> hits;
  ScanCounts counts;
  bool stopped_at_failure = false;
};

ChunkOutcome scan_chunk(const Base& g, const Polynomial& f,
                        const PolySieve* sieve, std::uint64_t begin,
                        std::uint64_t end, bool stop_on_failure,
                        bool allow_negative) {
  ChunkOutcome out;
  out.begin = begin;
  out.end = end;
  const std::uint32_t length = static_cast<std::uint32_t>(end - begin);

  SieveSegment seg;
  if (sieve != nullptr) seg = sieve->segment(begin, length);

  for (std::uint32_t i = 0; i < length; ++i) {
    if (sieve != nullptr && !seg.survives(i)) continue;
    const std::uint64_t n = begin + i;
    const i128 value = f.eval(n);
    if (value <= 1 && !allow_negative) continue;
    const u128 p = abs_wide(value);
    if (p < 2) continue;
    if (!is_prime(p)) continue;
    ++out.counts.prime;
    const PrStatus verdict = classify(g, p);
    if (verdict == PrStatus::DividesG) ++out.counts.skipped_divides_g;
    out.hits.push_back({n, p, verdict});
    if (verdict == PrStatus::NotPrimitiveRoot && stop_on_failure) {
      out.counts.evaluated = n - begin + 1;
      out.stopped_at_failure = true;
      return out;
    }
  }
  out.counts.evaluated = length;
  return out;
}

// Sequential merge bookkeeping shared by the single- and multi-threaded
// paths; consumes chunk outcomes strictly in range order.
class RunMerger {
 public:
  RunMerger(const Base& g, const Polynomial& f, std::uint64_t n_begin,
            std::uint64_t n_end, bool stop_on_failure, const EventSink& sink)
      : stop_on_failure_(stop_on_failure),
        monotone_(f.strictly_increasing_on(n_begin, n_end) &&
                  (n_end <= n_begin || f.eval(n_begin) >= 0)),
        sink_(sink) {
    report_.n_begin = n_begin;
    report_.n_end = n_end;
  }

  // Returns false once merging should stop (failure found in stop mode).
  bool consume(const ChunkOutcome& chunk) {
    report_.counts.evaluated += chunk.counts.evaluated;
    report_.counts.prime += chunk.counts.prime;
    report_.counts.skipped_divides_g += chunk.counts.skipped_divides_g;
    for (const PrimeHit& hit : chunk.hits) {
      ArtinEvent event;
      event.n = hit.n;
      event.p = hit.p;
      event.verdict = hit.verdict;
      if (hit.verdict == PrStatus::DividesG) {
        event.sequence_index = members_ + 1;
        event.duplicate = false;
      } else {
        event.sequence_index = ++members_;
        event.duplicate = !remember(hit.p);
        if (!failure_found_) {
          if (hit.verdict == PrStatus::PrimitiveRoot) {
            report_.r = members_;
            if (!event.duplicate) ++report_.c;
          } else {
            report_.first_failure = {hit.n, hit.p};
            failure_found_ = true;
          }
        }
      }
      if (sink_) sink_(event);
      if (failure_found_ && stop_on_failure_) return false;
    }
    return !(failure_found_ && stop_on_failure_);
  }

  RunReport finish() {
    report_.terminated =
        failure_found_ ? Terminated::FailureFound : Terminated::RangeExhausted;
    return report_;
  }

 private:
  // true if p is new
  bool remember(u128 p) {
    if (monotone_) {
      const bool fresh = !last_prime_ || *last_prime_ != p;
      last_prime_ = p;
      return fresh;
    }
    return seen_.insert(p).second;
  }

  bool stop_on_failure_;
  bool monotone_;
  const EventSink& sink_;
  RunReport report_;
  std::uint64_t members_ = 0;
  bool failure_found_ = false;
  std::optional<u128> last_prime_;
  struct U128Hash {
    std::size_t operator()(u128 v) const noexcept {
      return std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(v) ^
                                        (static_cast<std::uint64_t>(v >> 64) *
                                         0x9e3779b97f4a7c15ULL));
    }
  };
  std::unordered_set<u128, U128Hash> seen_;
};

// Validates that every argument in [begin, end) evaluates within bounds by
// probing the integer extrema of each monotone piece.
void validate_range(const Polynomial& f, std::uint64_t begin, std::uint64_t end) {
  if (begin >= end) return;
  // eval throws on the offending argument; probing the endpoints plus the
  // critical-point neighborhoods covers the extremes of every piece.
  f.eval(begin);
  f.eval(end - 1);
  const auto cs = f.coefficients();
  const i128 c1 = cs[1];
  const i128 c2 = cs.size() > 2 ? cs[2] : 0;
  const i128 c3 = cs.size() > 3 ? cs[3] : 0;
  const auto probe = [&](i128 x) {
    for (i128 d = -1; d <= 1; ++d) {
      const i128 v = x + d;
      if (v > static_cast<i128>(begin) && v < static_cast<i128>(end - 1))
        f.eval(static_cast<std::uint64_t>(v));
    }
  };
  if (c3 == 0) {
    if (c2 != 0) probe(-c1 / (2 * c2));
  } else {
    i128 t, disc, u;
    if (__builtin_mul_overflow(c2, c2, &t) ||
        __builtin_mul_overflow(static_cast<i128>(4), t, &disc) ||
        __builtin_mul_overflow(static_cast<i128>(12) * c3, c1, &u) ||
        __builtin_sub_overflow(disc, u, &disc))
      throw std::range_error("artin_run: coefficient range too large");
    if (disc >= 0) {
      const i128 s = static_cast<i128>(isqrt(static_cast<u128>(disc)));
      probe((-2 * c2 - s) / (6 * c3));
      probe((-2 * c2 + s) / (6 * c3));
    }
  }
}

}  // namespace

bool is_primitive_root(const Base& g, u128 p, const Factorization& fac) {
  check_pr_preconditions(g, p, fac);
  if (p == 2) return true;
  const u128 gm = reduce_base(g.value, p);
  const Montgomery mt(p);
  const u128 base_m = mt.to_mont(gm);
  const u128 one = mt.one();
  for (const auto& [q, exponent] : fac.factors)
    if (mt.pow(base_m, (p - 1) / q) == one) return false;
  return true;
}

u128 multiplicative_order(const Base& g, u128 p, const Factorization& fac) {
  check_pr_preconditions(g, p, fac);
  if (p == 2) return 1;
  const u128 gm = reduce_base(g.value, p);
  const Montgomery mt(p);
  const u128 base_m = mt.to_mont(gm);
  const u128 one = mt.one();
  u128 order = p - 1;
  for (const auto& [q, exponent] : fac.factors)
    for (std::uint32_t i = 0; i < exponent; ++i) {
      if (order % q != 0) break;
      if (mt.pow(base_m, order / q) != one) break;
      order /= q;
    }
  return order;
}

RunReport artin_run(const Base& g, const Polynomial& f, std::uint64_t n_begin,
                    std::uint64_t n_end, const RunOptions& options,
                    const EventSink& sink) {
  if (n_end < n_begin)
    throw std::invalid_argument("artin_run: n_end must be >= n_begin");
  validate_range(f, n_begin, n_end);

  const std::uint64_t chunk_length =
      std::clamp<std::uint64_t>(options.chunk_length, 1, 1 << 26);
  const std::uint64_t total = n_end - n_begin;
  const std::uint64_t num_chunks = (total + chunk_length - 1) / chunk_length;

  std::unique_ptr<PolySieve> sieve;
  if (options.sieve_bound >= 2 && total > 0)
    sieve = std::make_unique<PolySieve>(f, options.sieve_bound);

  RunMerger merger(g, f, n_begin, n_end, options.stop_on_failure, sink);
  const auto chunk_bounds = [&](std::uint64_t idx) {
    const std::uint64_t a = n_begin + idx * chunk_length;
    return std::pair{a, std::min(n_end, a + chunk_length)};
  };

  unsigned threads = options.threads == 0
                         ? std::max(1u, std::thread::hardware_concurrency())
                         : options.threads;
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, std::max<std::uint64_t>(num_chunks, 1)));

  if (threads <= 1 || num_chunks <= 1) {
    for (std::uint64_t idx = 0; idx < num_chunks; ++idx) {
      const auto [a, b] = chunk_bounds(idx);
      const ChunkOutcome chunk = scan_chunk(g, f, sieve.get(), a, b,
                                            options.stop_on_failure,
                                            options.allow_negative);
      const bool keep_going = merger.consume(chunk);
      if (options.progress) options.progress(b - n_begin, total);
      if (!keep_going) break;
    }
    return merger.finish();
  }

  std::mutex mu;
  std::condition_variable cv;
  std::unordered_map<std::uint64_t, ChunkOutcome> ready;
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> cancel{false};

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::uint64_t idx = next.fetch_add(1);
        if (idx >= num_chunks || cancel.load(std::memory_order_relaxed)) return;
        const auto [a, b] = chunk_bounds(idx);
        ChunkOutcome chunk = scan_chunk(g, f, sieve.get(), a, b,
                                        options.stop_on_failure,
                                        options.allow_negative);
        std::lock_guard lock(mu);
        ready.emplace(idx, std::move(chunk));
        cv.notify_all();
      }
    });
  }

  for (std::uint64_t idx = 0; idx < num_chunks; ++idx) {
    ChunkOutcome chunk;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return ready.count(idx) != 0; });
      chunk = std::move(ready.at(idx));
      ready.erase(idx);
    }
    const bool keep_going = merger.consume(chunk);
    if (options.progress) options.progress(chunk.end - n_begin, total);
    if (!keep_going) {
      cancel.store(true, std::memory_order_relaxed);
      break;
    }
  }
  cancel.store(true, std::memory_order_relaxed);
  for (auto& th : pool) th.join();
  return merger.finish();
}

bool VerificationReport::all_pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) {
    return c.status == CheckStatus::Pass;
  });
}

bool VerificationReport::inconclusive() const noexcept {
  return std::any_of(checks.begin(), checks.end(), [](const auto& c) {
    return c.status == CheckStatus::Inconclusive;
  });
}

VerificationReport verify_record(const RecordInstance& instance,
                                 const RunOptions& options) {
  VerificationReport out;
  const Base g(instance.g);

  const auto dep = instance.f.depressed();
  const std::uint64_t shift = dep ? dep->second : 0;
  out.shift = shift;
  out.used_depressed_form = dep.has_value();

  // scan window in direct-form coordinates
  const std::uint64_t x_hi =
      instance.n_hi >= shift ? instance.n_hi - shift : 0;
  const std::uint64_t x_end = x_hi + 1 + kVerifySlack;

  RunOptions opts = options;
  opts.stop_on_failure = true;

  std::vector<ArtinEvent> direct_events;
  const RunReport direct = artin_run(
      g, instance.f, 0, x_end, opts,
      [&](const ArtinEvent& e) { direct_events.push_back(e); });

  std::vector<ArtinEvent> dep_events;
  RunReport dep_report = direct;
  if (dep) {
    dep_events.clear();
    dep_report = artin_run(g, dep->first, shift, shift + x_end, opts,
                           [&](const ArtinEvent& e) { dep_events.push_back(e); });
  }

  // (a) identical prime sequences from both forms
  if (dep) {
    bool same = direct_events.size() == dep_events.size();
    std::size_t mismatch = 0;
    if (same) {
      for (std::size_t i = 0; i < direct_events.size(); ++i) {
        const auto& a = direct_events[i];
        const auto& b = dep_events[i];
        if (a.p != b.p || a.verdict != b.verdict || a.n + shift != b.n ||
            a.sequence_index != b.sequence_index ||
            a.duplicate != b.duplicate) {
          same = false;
          mismatch = i;
          break;
        }
      }
    }
    out.checks.push_back(
        {"form_equivalence",
         same ? CheckStatus::Pass : CheckStatus::Fail,
         same ? "both forms produced " + std::to_string(direct_events.size()) +
                    " identical events"
              : "event streams differ (sizes " +
                    std::to_string(direct_events.size()) + " vs " +
                    std::to_string(dep_events.size()) + ", first mismatch at " +
                    std::to_string(mismatch) + ")"});
  } else {
    out.checks.push_back({"form_equivalence", CheckStatus::Pass,
                          "no depressed form; single scan"});
  }

  const RunReport& rep = dep ? dep_report : direct;
  const std::vector<ArtinEvent>& events = dep ? dep_events : direct_events;
  out.run = rep;

  // (b) distinct-prime count
  out.checks.push_back(
      {"distinct_count",
       rep.c == instance.expected_c ? CheckStatus::Pass : CheckStatus::Fail,
       "c = " + std::to_string(rep.c) + ", expected " +
           std::to_string(instance.expected_c)});

  // (c) run primes' arguments confined to [n_lo, n_hi]
  std::uint64_t min_n = 0, max_n = 0;
  bool contained = true;
  bool any = false;
  for (const ArtinEvent& e : events) {
    if (e.verdict != PrStatus::PrimitiveRoot || e.sequence_index > rep.r)
      continue;
    if (!any) {
      min_n = max_n = e.n;
      any = true;
    } else {
      min_n = std::min(min_n, e.n);
      max_n = std::max(max_n, e.n);
    }
    if (e.n < instance.n_lo || e.n > instance.n_hi) contained = false;
  }
  out.checks.push_back(
      {"n_interval", contained ? CheckStatus::Pass : CheckStatus::Fail,
       any ? "run primes span n in [" + std::to_string(min_n) + ", " +
                 std::to_string(max_n) + "], expected within [" +
                 std::to_string(instance.n_lo) + ", " +
                 std::to_string(instance.n_hi) + "]"
           : "no run primes found"});

  // (d) first prime past the interval terminates the run
  if (rep.terminated == Terminated::RangeExhausted) {
    out.checks.push_back({"boundary_failure", CheckStatus::Inconclusive,
                          "scan window exhausted without a failure; run "
                          "length is only a lower bound"});
  } else {
    const auto& [fn, fp] = *rep.first_failure;
    const bool past = fn > instance.n_hi;
    out.checks.push_back(
        {"boundary_failure", past ? CheckStatus::Pass : CheckStatus::Fail,
         "first failure at n = " + std::to_string(fn) + " (p = " +
             to_string(fp) + ")" +
             (fn == instance.n_hi + 1 ? ", immediately after the interval"
                                      : "")});
  }
  return out;
}

}  // namespace artin
