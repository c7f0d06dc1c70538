// artin: consecutive-primitive-root run toolkit.
//
// Subcommands: verify, run, search, factor, is-prime, pr-test.
// Exit codes: 0 success/pass, 1 verification failure, 2 usage or input
// error, 3 inconclusive scan, 4 persistence failure.
// Report lines go to stdout (or --out); progress lines go to stderr.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "artin/artin_run.hpp"
#include "artin/digest.hpp"
#include "artin/factor.hpp"
#include "artin/polynomial.hpp"
#include "artin/primality.hpp"
#include "artin/report.hpp"
#include "artin/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitPersistence = 4;

std::atomic<bool> g_interrupted{false};

void handle_sigint(int) { g_interrupted.store(true); }

unsigned default_threads() {
  if (const char* env = std::getenv("ARTIN_THREADS")) {
    const unsigned v = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    if (v > 0) return v;
  }
  return 1;
}

struct OutputTarget {
  std::ostream* stream = &std::cout;
  std::ofstream file;

  bool open(const std::string& path) {
    if (path.empty()) return true;
    file.open(path, std::ios::trunc);
    if (!file) return false;
    stream = &file;
    return true;
  }
};

bool parse_range(const std::string& text, std::uint64_t* lo, std::uint64_t* hi) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return false;
  try {
    std::size_t used = 0;
    *lo = std::stoull(text.substr(0, colon), &used);
    if (used != colon) return false;
    const std::string rest = text.substr(colon + 1);
    *hi = std::stoull(rest, &used);
    return used == rest.size();
  } catch (const std::exception&) {
    return false;
  }
}

std::optional<artin::u128> parse_wide_arg(const std::string& text) {
  const auto v = artin::parse_u128(text);
  if (!v || *v >= artin::kValueBound) return std::nullopt;
  return v;
}

std::string run_fingerprint(const artin::Polynomial& f, artin::i128 g,
                            std::uint64_t n_begin, std::uint64_t n_end,
                            const artin::RunOptions& opts) {
  std::string key = "run|" + f.csv() + "|" + artin::to_string(g) + "|" +
                    std::to_string(n_begin) + ":" + std::to_string(n_end) +
                    "|stop=" + (opts.stop_on_failure ? "1" : "0") +
                    "|neg=" + (opts.allow_negative ? "1" : "0") +
                    "|B=" + std::to_string(opts.sieve_bound);
  return artin::sha256_hex(key);
}

class ProgressPrinter {
 public:
  void operator()(std::uint64_t done, std::uint64_t total) {
    const auto now = std::chrono::steady_clock::now();
    if (done < total && now - last_ < std::chrono::seconds(1)) return;
    last_ = now;
    artin::ProgressLine line;
    line.done = done;
    line.total = total;
    line.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(now - start_)
            .count());
    std::cerr << artin::to_line(line) << '\n';
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
  std::chrono::steady_clock::time_point last_ = start_;
};

int cmd_verify(const std::string& record_name, const std::string& poly_csv,
               const std::string& g_text, std::uint64_t expect_c,
               bool expect_c_given, const std::string& n_range,
               unsigned threads, std::uint32_t sieve_bound, std::uint64_t chunk,
               const std::string& out_path, bool quiet_progress) {
  std::optional<artin::RecordInstance> instance;
  if (!record_name.empty()) {
    instance = artin::find_record(record_name);
    if (!instance) {
      std::cerr << "unknown record name: " << record_name << '\n';
      return kExitUsage;
    }
    if (expect_c_given) instance->expected_c = expect_c;
    if (!n_range.empty()) {
      std::uint64_t lo = 0, hi = 0;
      if (!parse_range(n_range, &lo, &hi) || hi < lo) {
        std::cerr << "malformed n-range (want lo:hi): " << n_range << '\n';
        return kExitUsage;
      }
      instance->n_lo = lo;
      instance->n_hi = hi;
    }
  } else {
    if (poly_csv.empty() || g_text.empty() || n_range.empty()) {
      std::cerr << "user instances need --poly, --g, --expect-c and --n-range\n";
      return kExitUsage;
    }
    auto f = artin::Polynomial::parse_csv(poly_csv);
    if (!f) {
      std::cerr << "malformed polynomial spec: " << poly_csv << '\n';
      return kExitUsage;
    }
    const auto g = artin::parse_i128(g_text);
    if (!g || artin::abs_wide(*g) >= artin::kCoeffBound) {
      std::cerr << "malformed g: " << g_text << '\n';
      return kExitUsage;
    }
    std::uint64_t lo = 0, hi = 0;
    if (!parse_range(n_range, &lo, &hi) || hi < lo) {
      std::cerr << "malformed n-range (want lo:hi): " << n_range << '\n';
      return kExitUsage;
    }
    instance = artin::RecordInstance{"user", std::move(*f), *g, expect_c, lo, hi};
  }

  OutputTarget out;
  if (!out.open(out_path)) {
    std::cerr << "cannot open output file: " << out_path << '\n';
    return kExitPersistence;
  }

  artin::RunOptions opts;
  opts.threads = threads;
  opts.sieve_bound = sieve_bound;
  opts.chunk_length = chunk;
  ProgressPrinter progress;
  if (!quiet_progress) opts.progress = std::ref(progress);

  artin::VerificationReport report;
  try {
    report = artin::verify_record(*instance, opts);
  } catch (const std::range_error& e) {
    std::cerr << "scan range overflow: " << e.what() << '\n';
    return kExitUsage;
  }

  for (const auto& check : report.checks) {
    artin::VerificationLine line{check.name, check.status, check.detail};
    *out.stream << artin::to_line(line) << '\n';
  }
  const std::string fp = run_fingerprint(instance->f, instance->g, 0,
                                         instance->n_hi + 1 + artin::kVerifySlack,
                                         opts);
  artin::SummaryLine summary{std::string(artin::kToolVersion), fp, report.run};
  *out.stream << artin::to_line(summary) << '\n';
  out.stream->flush();

  const bool any_fail =
      std::any_of(report.checks.begin(), report.checks.end(), [](const auto& c) {
        return c.status == artin::CheckStatus::Fail;
      });
  if (any_fail) return kExitVerifyFail;
  if (report.inconclusive()) return kExitInconclusive;
  return kExitOk;
}

int cmd_run(const std::string& poly_csv, const std::string& g_text,
            const std::string& n_range, bool no_stop, bool allow_negative,
            std::uint32_t sieve_bound, unsigned threads, std::uint64_t chunk,
            const std::string& out_path, bool quiet_progress) {
  auto f = artin::Polynomial::parse_csv(poly_csv);
  if (!f) {
    std::cerr << "malformed polynomial spec: " << poly_csv << '\n';
    return kExitUsage;
  }
  const auto g = artin::parse_i128(g_text);
  if (!g || artin::abs_wide(*g) >= artin::kCoeffBound) {
    std::cerr << "malformed g: " << g_text << '\n';
    return kExitUsage;
  }
  std::uint64_t lo = 0, hi = 0;
  if (!parse_range(n_range, &lo, &hi) || hi < lo) {
    std::cerr << "malformed n-range (want begin:end, half-open): " << n_range
              << '\n';
    return kExitUsage;
  }

  OutputTarget out;
  if (!out.open(out_path)) {
    std::cerr << "cannot open output file: " << out_path << '\n';
    return kExitPersistence;
  }

  artin::RunOptions opts;
  opts.stop_on_failure = !no_stop;
  opts.allow_negative = allow_negative;
  opts.sieve_bound = sieve_bound;
  opts.threads = threads;
  opts.chunk_length = chunk;
  ProgressPrinter progress;
  if (!quiet_progress) opts.progress = std::ref(progress);

  artin::RunReport report;
  try {
    report = artin::artin_run(artin::Base(*g), *f, lo, hi, opts,
                              [&](const artin::ArtinEvent& event) {
                                *out.stream << artin::to_line(event) << '\n';
                              });
  } catch (const std::range_error& e) {
    std::cerr << "scan range overflow: " << e.what() << '\n';
    return kExitUsage;
  }

  artin::SummaryLine summary{std::string(artin::kToolVersion),
                             run_fingerprint(*f, *g, lo, hi, opts), report};
  *out.stream << artin::to_line(summary) << '\n';
  out.stream->flush();
  return kExitOk;
}

int cmd_search(const std::string& config_path, const std::string& resume_path,
               const std::string& checkpoint_out,
               const std::string& leaderboard_out, unsigned threads) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "cannot read config: " << config_path << '\n';
    return kExitUsage;
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  artin::SearchConfig cfg;
  try {
    cfg = artin::SearchConfig::from_json_text(text);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  std::optional<artin::Checkpoint> resume;
  if (!resume_path.empty()) {
    try {
      resume = artin::Checkpoint::load(resume_path);
    } catch (const std::invalid_argument& e) {
      std::cerr << e.what() << '\n';
      return kExitUsage;
    }
    if (resume->fingerprint != cfg.fingerprint()) {
      std::cerr << "checkpoint fingerprint does not match this configuration\n";
      return kExitUsage;
    }
  }

  artin::SearchController ctrl;
  ctrl.on_progress = [&](std::uint64_t merged, std::uint64_t total) {
    if (g_interrupted.load()) ctrl.cancel.store(true);
    if (merged % 100 == 0) {
      artin::ProgressLine line;
      line.done = merged;
      line.total = total;
      std::cerr << artin::to_line(line) << '\n';
    }
  };
  std::signal(SIGINT, handle_sigint);

  artin::SearchResult result;
  try {
    result = artin::run_search(cfg, resume, checkpoint_out, threads, &ctrl);
  } catch (const artin::CheckpointError& e) {
    std::cerr << e.what() << '\n';
    return kExitPersistence;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  if (!leaderboard_out.empty()) {
    std::ofstream board(leaderboard_out, std::ios::trunc);
    if (!board) {
      std::cerr << "cannot open leaderboard file: " << leaderboard_out << '\n';
      return kExitPersistence;
    }
    for (const auto& e : result.checkpoint.leaderboard) {
      // leaderboard entries render as summary lines keyed by candidate
      artin::RunReport rep;
      rep.r = e.r;
      rep.c = e.c;
      rep.n_begin = e.n_begin;
      rep.n_end = e.n_end;
      rep.terminated = e.terminated;
      const std::string fp =
          artin::sha256_hex("candidate|" + e.f.csv() + "|" + artin::to_string(e.g));
      artin::SummaryLine line{std::string(artin::kToolVersion), fp, rep};
      board << artin::to_line(line) << '\n';
    }
    board.flush();
    if (!board) {
      std::cerr << "leaderboard write failed\n";
      return kExitPersistence;
    }
  }

  std::cerr << (result.completed ? "search complete" : "search interrupted")
            << "; cursor " << result.checkpoint.cursor << "/"
            << result.checkpoint.total << '\n';
  return kExitOk;
}

int cmd_factor(const std::string& text) {
  const auto n = parse_wide_arg(text);
  if (!n || *n == 0) {
    std::cerr << "argument must be a decimal integer in [1, 2^72)\n";
    return kExitUsage;
  }
  const artin::Factorization fac = artin::factorize(*n);
  std::string out;
  for (const auto& [prime, exponent] : fac.factors) {
    if (!out.empty()) out += " * ";
    out += artin::to_string(prime);
    if (exponent > 1) out += "^" + std::to_string(exponent);
  }
  if (out.empty()) out = "1";
  std::cout << out << '\n';
  return kExitOk;
}

int cmd_is_prime(const std::string& text) {
  const auto n = parse_wide_arg(text);
  if (!n) {
    std::cerr << "argument must be a decimal integer below 2^72\n";
    return kExitUsage;
  }
  const artin::PrimalityResult r = artin::primality(*n);
  const char* method = r.method == artin::PrimalityMethod::SmallSieve
                           ? "small-sieve"
                           : r.method == artin::PrimalityMethod::DeterministicMR
                                 ? "deterministic-mr"
                                 : "bpsw+mr";
  std::cout << (r.prime() ? "Prime" : "Composite") << " (" << method << ")\n";
  return kExitOk;
}

int cmd_pr_test(const std::string& g_text, const std::string& p_text) {
  const auto g = artin::parse_i128(g_text);
  if (!g || artin::abs_wide(*g) >= artin::kCoeffBound) {
    std::cerr << "malformed g: " << g_text << '\n';
    return kExitUsage;
  }
  const auto p = parse_wide_arg(p_text);
  if (!p) {
    std::cerr << "p must be a decimal integer below 2^72\n";
    return kExitUsage;
  }
  if (!artin::is_prime(*p)) {
    std::cerr << "p = " << artin::to_string(*p) << " is not prime\n";
    return kExitUsage;
  }
  const artin::Factorization fac = artin::factorize(*p - 1);
  std::string fac_text;
  for (const auto& [prime, exponent] : fac.factors) {
    if (!fac_text.empty()) fac_text += " * ";
    fac_text += artin::to_string(prime);
    if (exponent > 1) fac_text += "^" + std::to_string(exponent);
  }
  if (fac_text.empty()) fac_text = "1";

  const artin::Base base(*g);
  const artin::u128 gm = [&] {
    const artin::u128 mag = artin::abs_wide(*g) % *p;
    return *g < 0 && mag != 0 ? *p - mag : mag;
  }();
  if (*p != 2 && gm == 0) {
    std::cout << "false (g divisible by p; p-1 = " << fac_text << ")\n";
    return kExitOk;
  }
  const bool pr = artin::is_primitive_root(base, *p, fac);
  std::cout << (pr ? "true" : "false") << " (p-1 = " << fac_text << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"consecutive-primitive-root run toolkit"};
  app.require_subcommand(1);
  const unsigned env_threads = default_threads();

  // verify
  auto* verify = app.add_subcommand(
      "verify", "re-verify a built-in or user-supplied record instance");
  std::string v_record, v_poly, v_g, v_range, v_out;
  std::uint64_t v_expect = 0, v_chunk = 1 << 20;
  unsigned v_threads = env_threads;
  std::uint32_t v_sieve = 100000;
  bool v_quiet = false;
  verify->add_option("record", v_record, "built-in record name (e.g. gallot2004)");
  verify->add_option("--poly", v_poly, "coefficients, constant term first");
  verify->add_option("--g", v_g, "base integer g");
  verify->add_option("--expect-c", v_expect, "expected distinct-prime count");
  verify->add_option("--n-range", v_range,
                     "expected inclusive interval lo:hi of prime-producing n");
  verify->add_option("--threads", v_threads, "worker threads");
  verify->add_option("--sieve-bound", v_sieve, "small-prime sieve bound");
  verify->add_option("--chunk", v_chunk, "scan segment length");
  verify->add_option("--out", v_out, "report file (default stdout)");
  verify->add_flag("--quiet-progress", v_quiet, "suppress progress lines");

  // run
  auto* run = app.add_subcommand("run", "scan one (g, f) pair over an n-range");
  std::string r_poly, r_g, r_range, r_out;
  bool r_no_stop = false, r_allow_neg = false, r_quiet = false;
  std::uint32_t r_sieve = 100000;
  std::uint64_t r_chunk = 1 << 20;
  unsigned r_threads = env_threads;
  run->add_option("--poly", r_poly, "coefficients, constant term first")
      ->required();
  run->add_option("--g", r_g, "base integer g")->required();
  run->add_option("--n-range", r_range, "half-open scan range begin:end")
      ->required();
  run->add_flag("--no-stop", r_no_stop, "scan the whole range past failures");
  run->add_flag("--allow-negative", r_allow_neg,
                "test |f(n)| when f(n) is negative");
  run->add_option("--sieve-bound", r_sieve, "small-prime sieve bound");
  run->add_option("--threads", r_threads, "worker threads");
  run->add_option("--chunk", r_chunk, "scan segment length");
  run->add_option("--out", r_out, "report file (default stdout)");
  run->add_flag("--quiet-progress", r_quiet, "suppress progress lines");

  // search
  auto* search = app.add_subcommand("search", "search candidate (g, f) pairs");
  std::string s_config, s_resume, s_ckpt = "search.checkpoint.json",
              s_board = "leaderboard.jsonl";
  unsigned s_threads = env_threads;
  search->add_option("--config", s_config, "search configuration (JSON)")
      ->required();
  search->add_option("--resume", s_resume, "checkpoint to resume from");
  search->add_option("--checkpoint-out", s_ckpt, "checkpoint file path");
  search->add_option("--leaderboard-out", s_board, "leaderboard report file");
  search->add_option("--threads", s_threads, "worker threads");

  // kernels
  auto* factor = app.add_subcommand("factor", "factor an integer");
  std::string f_n;
  factor->add_option("n", f_n, "decimal integer in [1, 2^72)")->required();

  auto* isp = app.add_subcommand("is-prime", "primality verdict");
  std::string i_n;
  isp->add_option("n", i_n, "decimal integer below 2^72")->required();

  auto* prt = app.add_subcommand("pr-test", "primitive-root test");
  std::string p_g, p_p;
  prt->add_option("--g", p_g, "base integer g")->required();
  prt->add_option("--p", p_p, "prime modulus")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed())
      return cmd_verify(v_record, v_poly, v_g, v_expect,
                        verify->count("--expect-c") > 0, v_range, v_threads,
                        v_sieve, v_chunk, v_out, v_quiet);
    if (run->parsed())
      return cmd_run(r_poly, r_g, r_range, r_no_stop, r_allow_neg, r_sieve,
                     r_threads, r_chunk, r_out, r_quiet);
    if (search->parsed())
      return cmd_search(s_config, s_resume, s_ckpt, s_board, s_threads);
    if (factor->parsed()) return cmd_factor(f_n);
    if (isp->parsed()) return cmd_is_prime(i_n);
    if (prt->parsed()) return cmd_pr_test(p_g, p_p);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
