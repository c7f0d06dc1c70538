#include "artin/search.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "artin/digest.hpp"
#include "artin/modmath.hpp"

namespace artin {
namespace {

using nlohmann::json;

std::string now_utc_iso8601() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ",
                tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                tm.tm_min, tm.tm_sec);
  return buf;
}

i128 json_wide(const json& j) {
  const auto v = parse_i128(j.get<std::string>());
  if (!v) throw std::invalid_argument("search: bad wide integer field");
  return *v;
}

json wide_json(i128 v) { return to_string(v); }

json entry_to_json(const LeaderboardEntry& e) {
  json j;
  json coeffs = json::array();
  for (const i128 c : e.f.coefficients()) coeffs.push_back(wide_json(c));
  j["f"] = std::move(coeffs);
  j["g"] = wide_json(e.g);
  j["c"] = e.c;
  j["r"] = e.r;
  j["n_begin"] = e.n_begin;
  j["n_end"] = e.n_end;
  j["terminated"] = e.terminated == Terminated::FailureFound
                        ? "failure_found"
                        : "range_exhausted";
  j["timestamp"] = e.timestamp;
  return j;
}

LeaderboardEntry entry_from_json(const json& j) {
  std::vector<i128> coeffs;
  for (const auto& c : j.at("f")) coeffs.push_back(json_wide(c));
  LeaderboardEntry e{Polynomial(std::move(coeffs)),
                     json_wide(j.at("g")),
                     j.at("c").get<std::uint64_t>(),
                     j.at("r").get<std::uint64_t>(),
                     j.at("n_begin").get<std::uint64_t>(),
                     j.at("n_end").get<std::uint64_t>(),
                     Terminated::RangeExhausted,
                     j.at("timestamp").get<std::string>()};
  if (j.at("terminated").get<std::string>() == "failure_found")
    e.terminated = Terminated::FailureFound;
  return e;
}

// fixed divisor of the value set: gcd of f(0..3)
u128 fixed_divisor(const Polynomial& f) {
  u128 g = 0;
  for (std::uint64_t n = 0; n <= 3; ++n) {
    try {
      g = gcd(g, abs_wide(f.eval(n)));
    } catch (const std::range_error&) {
      return 1;  // cannot rule the candidate out
    }
  }
  return g;
}

void insert_capped(std::vector<LeaderboardEntry>& board, LeaderboardEntry e) {
  const auto pos = std::lower_bound(
      board.begin(), board.end(), e,
      [](const LeaderboardEntry& a, const LeaderboardEntry& b) {
        return leaderboard_less(a, b);
      });
  board.insert(pos, std::move(e));
  if (board.size() > kLeaderboardCap)
    board.erase(board.begin() + kLeaderboardCap, board.end());
}

}  // namespace

u128 GSource::count() const noexcept {
  switch (kind) {
    case Kind::List: return values.size();
    case Kind::Range: return lo > hi ? 0 : static_cast<u128>(hi - lo) + 1;
    case Kind::Derived: return 1;
  }
  return 0;
}

i128 GSource::value_at(u128 index, const Polynomial& f) const {
  switch (kind) {
    case Kind::List: return values[static_cast<std::size_t>(index)];
    case Kind::Range: return lo + static_cast<i128>(index);
    case Kind::Derived: break;
  }
  const auto cs = f.coefficients();
  switch (expr) {
    case Expr::ConstantTerm: return cs[0];
    case Expr::NegConstantTerm: return -cs[0];
    case Expr::Discriminant: {
      if (f.degree() != 2) return cs[0];
      // b^2 - 4ac may exceed the coefficient bound; callers filter
      const i128 b = cs[1];
      i128 b2, fourac;
      if (__builtin_mul_overflow(b, b, &b2)) return 0;
      if (__builtin_mul_overflow(static_cast<i128>(4) * cs[2], cs[0], &fourac))
        return 0;
      i128 disc;
      if (__builtin_sub_overflow(b2, fourac, &disc)) return 0;
      return disc;
    }
  }
  return cs[0];
}

void SearchConfig::validate() const {
  if (degree < 1 || degree > 3)
    throw std::invalid_argument("search config: degree must be 1..3");
  if (coeff_ranges.size() != degree + 1)
    throw std::invalid_argument(
        "search config: need degree+1 coefficient ranges, constant first");
  for (const auto& r : coeff_ranges) {
    if (r.lo <= r.hi &&
        (abs_wide(r.lo) >= kCoeffBound || abs_wide(r.hi) >= kCoeffBound))
      throw std::invalid_argument(
          "search config: coefficient bounds must stay below 2^70");
    if (r.size() > (static_cast<u128>(1) << 40))
      throw std::invalid_argument("search config: coefficient range too large");
  }
  if (g_source.kind == GSource::Kind::Range) {
    if (g_source.lo <= g_source.hi &&
        (abs_wide(g_source.lo) >= kCoeffBound ||
         abs_wide(g_source.hi) >= kCoeffBound))
      throw std::invalid_argument("search config: g bounds must stay below 2^70");
    if (g_source.count() > (static_cast<u128>(1) << 40))
      throw std::invalid_argument("search config: g range too large");
  }
  for (const i128 v : g_source.values)
    if (abs_wide(v) >= kCoeffBound)
      throw std::invalid_argument("search config: g values must stay below 2^70");
  if (quick_reject_threshold < 1)
    throw std::invalid_argument("search config: quick_reject_threshold must be >= 1");
  if (n_budget < 1)
    throw std::invalid_argument("search config: n_budget must be >= 1");
  if (record_floor < 2)
    throw std::invalid_argument("search config: record_floor must be >= 2");
  for (const auto& cc : coeff_congruences) {
    if (cc.index > degree)
      throw std::invalid_argument("search config: congruence index out of range");
    if (cc.modulus < 1)
      throw std::invalid_argument("search config: congruence modulus must be >= 1");
  }
  // overall candidate count must fit the 64-bit cursor
  u128 total = 1;
  for (const auto& r : coeff_ranges) total *= std::max<u128>(r.size(), 1);
  total *= std::max<u128>(g_source.count(), 1);
  if (total >> 63)
    throw std::invalid_argument("search config: candidate space too large");
}

std::string SearchConfig::to_canonical_json() const {
  json j;
  j["degree"] = degree;
  json ranges = json::array();
  for (const auto& r : coeff_ranges)
    ranges.push_back({{"lo", wide_json(r.lo)}, {"hi", wide_json(r.hi)}});
  j["coeff_ranges"] = std::move(ranges);
  json gs;
  switch (g_source.kind) {
    case GSource::Kind::List: {
      gs["kind"] = "list";
      json vals = json::array();
      for (const i128 v : g_source.values) vals.push_back(wide_json(v));
      gs["values"] = std::move(vals);
      break;
    }
    case GSource::Kind::Range:
      gs["kind"] = "range";
      gs["lo"] = wide_json(g_source.lo);
      gs["hi"] = wide_json(g_source.hi);
      break;
    case GSource::Kind::Derived:
      gs["kind"] = "derived";
      gs["expr"] = g_source.expr == GSource::Expr::ConstantTerm
                       ? "constant_term"
                       : g_source.expr == GSource::Expr::NegConstantTerm
                             ? "neg_constant_term"
                             : "discriminant";
      break;
  }
  j["g_source"] = std::move(gs);
  j["quick_reject_threshold"] = quick_reject_threshold;
  j["n_budget"] = n_budget;
  j["sieve_bound"] = sieve_bound;
  j["record_floor"] = record_floor;
  json congruences = json::array();
  for (const auto& cc : coeff_congruences)
    congruences.push_back({{"index", cc.index},
                           {"modulus", wide_json(cc.modulus)},
                           {"residue", wide_json(cc.residue)}});
  j["coeff_congruences"] = std::move(congruences);
  return j.dump();
}

SearchConfig SearchConfig::from_json_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("search config: bad JSON: ") +
                                e.what());
  }
  try {
    SearchConfig cfg;
    cfg.degree = j.at("degree").get<std::uint32_t>();
    for (const auto& r : j.at("coeff_ranges"))
      cfg.coeff_ranges.push_back({json_wide(r.at("lo")), json_wide(r.at("hi"))});
    const json& gs = j.at("g_source");
    const std::string kind = gs.at("kind").get<std::string>();
    if (kind == "list") {
      cfg.g_source.kind = GSource::Kind::List;
      for (const auto& v : gs.at("values"))
        cfg.g_source.values.push_back(json_wide(v));
    } else if (kind == "range") {
      cfg.g_source.kind = GSource::Kind::Range;
      cfg.g_source.lo = json_wide(gs.at("lo"));
      cfg.g_source.hi = json_wide(gs.at("hi"));
    } else if (kind == "derived") {
      cfg.g_source.kind = GSource::Kind::Derived;
      const std::string expr = gs.at("expr").get<std::string>();
      if (expr == "constant_term")
        cfg.g_source.expr = GSource::Expr::ConstantTerm;
      else if (expr == "neg_constant_term")
        cfg.g_source.expr = GSource::Expr::NegConstantTerm;
      else if (expr == "discriminant")
        cfg.g_source.expr = GSource::Expr::Discriminant;
      else
        throw std::invalid_argument("search config: unknown derived expr '" +
                                    expr + "'");
    } else {
      throw std::invalid_argument("search config: unknown g_source kind '" +
                                  kind + "'");
    }
    if (j.contains("quick_reject_threshold"))
      cfg.quick_reject_threshold = j.at("quick_reject_threshold").get<std::uint64_t>();
    if (j.contains("n_budget")) cfg.n_budget = j.at("n_budget").get<std::uint64_t>();
    if (j.contains("sieve_bound"))
      cfg.sieve_bound = j.at("sieve_bound").get<std::uint32_t>();
    if (j.contains("record_floor"))
      cfg.record_floor = j.at("record_floor").get<std::uint64_t>();
    if (j.contains("coeff_congruences"))
      for (const auto& cc : j.at("coeff_congruences"))
        cfg.coeff_congruences.push_back({cc.at("index").get<std::uint32_t>(),
                                         json_wide(cc.at("modulus")),
                                         json_wide(cc.at("residue"))});
    cfg.validate();
    return cfg;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("search config: malformed: ") +
                                e.what());
  }
}

std::string SearchConfig::fingerprint() const {
  return sha256_hex(to_canonical_json());
}

bool leaderboard_less(const LeaderboardEntry& a, const LeaderboardEntry& b) {
  if (a.c != b.c) return a.c > b.c;
  if (a.r != b.r) return a.r > b.r;
  const auto ac = a.f.coefficients();
  const auto bc = b.f.coefficients();
  if (ac.size() != bc.size()) return ac.size() < bc.size();
  for (std::size_t i = 0; i < ac.size(); ++i)
    if (ac[i] != bc[i]) return ac[i] < bc[i];
  return a.g < b.g;
}

bool leaderboard_equal(const LeaderboardEntry& a, const LeaderboardEntry& b) {
  return a.f == b.f && a.g == b.g && a.c == b.c && a.r == b.r &&
         a.n_begin == b.n_begin && a.n_end == b.n_end &&
         a.terminated == b.terminated;
}

std::string Checkpoint::to_json_text() const {
  json j;
  j["format_version"] = format_version;
  j["fingerprint"] = fingerprint;
  j["cursor"] = cursor;
  j["total"] = total;
  json board = json::array();
  for (const auto& e : leaderboard) board.push_back(entry_to_json(e));
  j["leaderboard"] = std::move(board);
  return j.dump(1);
}

Checkpoint Checkpoint::from_json_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("checkpoint: bad JSON: ") + e.what());
  }
  try {
    Checkpoint ck;
    ck.format_version = j.at("format_version").get<std::uint32_t>();
    if (ck.format_version != kCheckpointFormatVersion)
      throw std::invalid_argument("checkpoint: unsupported format version " +
                                  std::to_string(ck.format_version));
    ck.fingerprint = j.at("fingerprint").get<std::string>();
    ck.cursor = j.at("cursor").get<std::uint64_t>();
    ck.total = j.at("total").get<std::uint64_t>();
    for (const auto& e : j.at("leaderboard"))
      ck.leaderboard.push_back(entry_from_json(e));
    return ck;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("checkpoint: malformed: ") + e.what());
  }
}

void Checkpoint::save(const std::filesystem::path& path) const {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CheckpointError("checkpoint: cannot open " + tmp.string());
    out << to_json_text() << '\n';
    out.flush();
    if (!out) throw CheckpointError("checkpoint: write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec)
    throw CheckpointError("checkpoint: rename to " + path.string() +
                          " failed: " + ec.message());
}

Checkpoint Checkpoint::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("checkpoint: cannot read " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return from_json_text(text);
}

CandidateEnumerator::CandidateEnumerator(const SearchConfig& cfg) : cfg_(cfg) {
  cfg.validate();
  u128 total = 1;
  for (const auto& r : cfg.coeff_ranges) total *= r.size();
  total *= cfg.g_source.count();
  total_ = static_cast<std::uint64_t>(total);
}

void CandidateEnumerator::seek(std::uint64_t cursor) {
  if (cursor > total_)
    throw std::invalid_argument("enumerator: cursor beyond candidate space");
  cursor_ = cursor;
}

std::optional<Candidate> CandidateEnumerator::candidate_at(
    std::uint64_t index) const {
  // row-major decode: first coefficient range slowest, g fastest
  u128 rest = index;
  const u128 g_count = cfg_.g_source.count();
  const u128 g_idx = rest % g_count;
  rest /= g_count;
  std::vector<i128> coeffs(cfg_.coeff_ranges.size());
  for (std::size_t i = cfg_.coeff_ranges.size(); i-- > 0;) {
    const u128 size = cfg_.coeff_ranges[i].size();
    coeffs[i] = cfg_.coeff_ranges[i].lo + static_cast<i128>(rest % size);
    rest /= size;
  }

  // static filters
  for (const auto& cc : cfg_.coeff_congruences) {
    const i128 m = cc.modulus;
    const i128 want = ((cc.residue % m) + m) % m;
    const i128 got = ((coeffs[cc.index] % m) + m) % m;
    if (got != want) return std::nullopt;
  }
  if (coeffs.back() <= 0) return std::nullopt;
  Polynomial f(std::move(coeffs));
  if (fixed_divisor(f) > 1) return std::nullopt;
  const Base g(cfg_.g_source.value_at(g_idx, f));
  if (g.is_unit || g.is_perfect_square) return std::nullopt;
  if (abs_wide(g.value) >= kCoeffBound) return std::nullopt;
  return Candidate{std::move(f), g.value, index};
}

std::optional<Candidate> CandidateEnumerator::next() {
  while (cursor_ < total_) {
    const std::uint64_t index = cursor_++;
    auto c = candidate_at(index);
    if (c) return c;
  }
  return std::nullopt;
}

std::optional<LeaderboardEntry> evaluate_candidate(const Polynomial& f,
                                                   const Base& g,
                                                   const SearchConfig& cfg) {
  const std::uint64_t prefix = std::max<std::uint64_t>(1, cfg.n_budget / 64);

  RunOptions phase1;
  phase1.stop_on_failure = true;
  // a big sieve costs more to set up than a short prefix scan saves
  phase1.sieve_bound = std::min<std::uint32_t>(cfg.sieve_bound, 1024);
  phase1.chunk_length = std::min<std::uint64_t>(prefix, 1 << 20);
  const RunReport quick = artin_run(g, f, 0, prefix, phase1);
  if (quick.r < cfg.quick_reject_threshold) return std::nullopt;

  RunOptions phase2;
  phase2.stop_on_failure = true;
  phase2.sieve_bound = cfg.sieve_bound;
  const RunReport full = artin_run(g, f, 0, cfg.n_budget, phase2);

  return LeaderboardEntry{f,        g.value,     full.c,
                          full.r,   full.n_begin, full.n_end,
                          full.terminated, now_utc_iso8601()};
}

SearchResult run_search(const SearchConfig& cfg,
                        const std::optional<Checkpoint>& resume,
                        const std::filesystem::path& checkpoint_path,
                        unsigned threads, SearchController* ctrl) {
  cfg.validate();
  const std::string fp = cfg.fingerprint();
  if (resume && resume->fingerprint != fp)
    throw std::invalid_argument(
        "run_search: checkpoint fingerprint does not match the configuration");

  CandidateEnumerator enumerator(cfg);
  Checkpoint state;
  state.fingerprint = fp;
  state.total = enumerator.total_raw();
  if (resume) {
    state.cursor = resume->cursor;
    state.leaderboard = resume->leaderboard;
  }
  enumerator.seek(state.cursor);

  std::atomic<bool> stop{false};
  const auto cancelled = [&] {
    return stop.load(std::memory_order_relaxed) ||
           (ctrl != nullptr && ctrl->cancel.load(std::memory_order_relaxed));
  };

  std::uint64_t merged = 0;
  bool exhausted_all = false;
  const auto deliver = [&](std::uint64_t index,
                           std::optional<LeaderboardEntry> entry) {
    if (entry) insert_capped(state.leaderboard, std::move(*entry));
    state.cursor = index + 1;
    ++merged;
    if (merged % kCheckpointInterval == 0) state.save(checkpoint_path);
    if (ctrl && ctrl->on_progress) ctrl->on_progress(merged, state.total);
  };

  if (threads <= 1) {
    while (!cancelled()) {
      auto cand = enumerator.next();
      if (!cand) {
        exhausted_all = true;
        break;
      }
      std::optional<LeaderboardEntry> entry;
      try {
        entry = evaluate_candidate(cand->f, Base(cand->g), cfg);
      } catch (const std::range_error&) {
        // scan overflowed the value bound: candidate skipped
      }
      deliver(cand->index, std::move(entry));
    }
  } else {
    std::mutex mu;
    std::condition_variable cv;
    std::map<std::uint64_t, std::optional<LeaderboardEntry>> done;
    std::vector<std::uint64_t> issued;
    std::size_t merge_pos = 0;
    bool exhausted = false;
    unsigned workers_left = threads;

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          std::optional<Candidate> cand;
          {
            std::lock_guard lock(mu);
            if (cancelled()) break;
            cand = enumerator.next();
            if (!cand) {
              exhausted = true;
              break;
            }
            issued.push_back(cand->index);
          }
          std::optional<LeaderboardEntry> entry;
          try {
            entry = evaluate_candidate(cand->f, Base(cand->g), cfg);
          } catch (const std::range_error&) {
          }
          {
            std::lock_guard lock(mu);
            done.emplace(cand->index, std::move(entry));
          }
          cv.notify_all();
        }
        {
          std::lock_guard lock(mu);
          --workers_left;
        }
        cv.notify_all();
      });
    }

    // Merge strictly in issue order so the cursor is a contiguous
    // completion watermark; every issued candidate is always merged, even
    // after cancellation, so a resume never skips work.
    std::exception_ptr failure;
    for (;;) {
      std::uint64_t index = 0;
      std::optional<LeaderboardEntry> entry;
      bool have = false;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] {
          if (merge_pos < issued.size() &&
              done.count(issued[merge_pos]) != 0)
            return true;
          return workers_left == 0 && merge_pos >= issued.size();
        });
        if (merge_pos < issued.size()) {
          index = issued[merge_pos];
          entry = std::move(done.at(index));
          done.erase(index);
          ++merge_pos;
          have = true;
        }
      }
      if (!have) break;
      try {
        deliver(index, std::move(entry));
      } catch (...) {
        failure = std::current_exception();
        stop.store(true, std::memory_order_relaxed);
      }
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    exhausted_all = exhausted && !cancelled();
  }

  if (exhausted_all) state.cursor = state.total;
  state.save(checkpoint_path);
  return {std::move(state), state.cursor >= state.total};
}

}  // namespace artin
