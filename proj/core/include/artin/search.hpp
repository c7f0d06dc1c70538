// Heuristic search over candidate (g, f) pairs for long initial
// primitive-root runs, with a capped leaderboard and resumable, fully
// deterministic checkpointing.
#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "artin/artin_run.hpp"
#include "artin/polynomial.hpp"

namespace artin {

struct CoeffRange {
  i128 lo = 0, hi = -1;  // inclusive; lo > hi means empty
  u128 size() const noexcept {
    return lo > hi ? 0 : static_cast<u128>(hi - lo) + 1;
  }
};

struct GSource {
  enum class Kind { List, Range, Derived };
  // derived expressions evaluated per candidate polynomial
  enum class Expr { ConstantTerm, NegConstantTerm, Discriminant };

  Kind kind = Kind::List;
  std::vector<i128> values;  // List
  i128 lo = 0, hi = -1;      // Range, inclusive
  Expr expr = Expr::ConstantTerm;

  u128 count() const noexcept;
  i128 value_at(u128 index, const Polynomial& f) const;
};

struct CoeffCongruence {
  std::uint32_t index = 0;  // coefficient position, constant term = 0
  i128 modulus = 1;
  i128 residue = 0;
};

struct SearchConfig {
  std::uint32_t degree = 1;
  std::vector<CoeffRange> coeff_ranges;  // constant-first, degree+1 entries
  GSource g_source;
  std::uint64_t quick_reject_threshold = 1;  // T
  std::uint64_t n_budget = 1 << 16;
  std::uint32_t sieve_bound = 100000;
  std::uint64_t record_floor = 38639;
  std::vector<CoeffCongruence> coeff_congruences;

  // Throws std::invalid_argument on structural errors. Empty ranges and
  // empty g lists are valid and produce zero candidates.
  void validate() const;

  std::string to_canonical_json() const;
  static SearchConfig from_json_text(std::string_view text);
  std::string fingerprint() const;  // SHA-256 of the canonical form
};

struct LeaderboardEntry {
  Polynomial f;
  i128 g = 0;
  std::uint64_t c = 0, r = 0;
  std::uint64_t n_begin = 0, n_end = 0;
  Terminated terminated = Terminated::RangeExhausted;
  std::string timestamp;  // informational; excluded from comparisons
};

// Total order: c desc, r desc, coefficients lexicographic asc, g asc.
bool leaderboard_less(const LeaderboardEntry& a, const LeaderboardEntry& b);
// Structural equality, timestamp excluded.
bool leaderboard_equal(const LeaderboardEntry& a, const LeaderboardEntry& b);

inline constexpr std::size_t kLeaderboardCap = 100;
inline constexpr std::uint64_t kCheckpointInterval = 1000;
inline constexpr std::uint32_t kCheckpointFormatVersion = 1;

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Checkpoint {
  std::uint32_t format_version = kCheckpointFormatVersion;
  std::string fingerprint;
  std::uint64_t cursor = 0;  // next raw enumeration index to process
  std::uint64_t total = 0;   // raw enumeration size
  std::vector<LeaderboardEntry> leaderboard;

  std::string to_json_text() const;
  static Checkpoint from_json_text(std::string_view text);
  // Atomic write (temp file + rename); throws CheckpointError on I/O
  // failure.
  void save(const std::filesystem::path& path) const;
  static Checkpoint load(const std::filesystem::path& path);
};

struct Candidate {
  Polynomial f;
  i128 g;
  std::uint64_t index;  // raw enumeration position
};

// Deterministic row-major enumeration over coefficient ranges then g
// values, with static filters applied before yielding:
//   - zero or negative leading coefficient
//   - values sharing a fixed prime divisor (gcd of f(0..3))
//   - g in {-1, 0, 1} or a perfect square
//   - optional coefficient congruence masks
class CandidateEnumerator {
 public:
  explicit CandidateEnumerator(const SearchConfig& cfg);

  std::uint64_t total_raw() const noexcept { return total_; }
  std::uint64_t cursor() const noexcept { return cursor_; }
  // Throws std::invalid_argument for cursor > total_raw().
  void seek(std::uint64_t cursor);
  // Next surviving candidate, or nullopt when exhausted.
  std::optional<Candidate> next();

 private:
  std::optional<Candidate> candidate_at(std::uint64_t index) const;
  const SearchConfig& cfg_;
  std::uint64_t total_ = 0;
  std::uint64_t cursor_ = 0;
};

// Two-phase scan: a prefix of n_budget/64 arguments first; candidates whose
// run length stays below the quick-reject threshold are discarded
// (nullopt). Phase 2 rescans to the full budget with the configured sieve.
std::optional<LeaderboardEntry> evaluate_candidate(const Polynomial& f,
                                                   const Base& g,
                                                   const SearchConfig& cfg);

struct SearchController {
  std::atomic<bool> cancel{false};
  // called after each merged candidate: (merged_count, total_raw)
  std::function<void(std::uint64_t, std::uint64_t)> on_progress;
};

struct SearchResult {
  Checkpoint checkpoint;
  bool completed = false;  // false when cancelled
};

// Processes the candidate stream with a pool of workers and a single
// merger; the leaderboard and cursor advance in candidate order
// (contiguous-completion watermark), so a resumed search replays exactly.
// Writes the checkpoint every kCheckpointInterval merged candidates and at
// the end; checkpoint write failures propagate as CheckpointError.
SearchResult run_search(const SearchConfig& cfg,
                        const std::optional<Checkpoint>& resume,
                        const std::filesystem::path& checkpoint_path,
                        unsigned threads = 1, SearchController* ctrl = nullptr);

}  // namespace artin
