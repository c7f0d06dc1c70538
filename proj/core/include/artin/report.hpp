// Line-delimited report records: one JSON object per line, integers in
// decimal (wide integers as decimal strings), keys sorted, so identical
// inputs always produce byte-identical report files. Every emitted line
// parses back to an equal in-memory record.
#pragma once

#include <string>
#include <variant>

#include "artin/artin_run.hpp"
#include "artin/wide.hpp"

namespace artin {

struct SummaryLine {
  std::string version;
  std::string fingerprint;
  RunReport report;
  bool operator==(const SummaryLine&) const = default;
};

struct ProgressLine {
  std::uint64_t done = 0;
  std::uint64_t total = 0;
  std::uint64_t elapsed_ms = 0;
  bool operator==(const ProgressLine&) const = default;
};

struct VerificationLine {
  std::string check;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  bool operator==(const VerificationLine&) const = default;
};

using ReportLine =
    std::variant<ArtinEvent, SummaryLine, ProgressLine, VerificationLine>;

// One-line JSON rendering (no trailing newline).
std::string to_line(const ReportLine& line);

// Inverse of to_line; throws std::invalid_argument on malformed input.
ReportLine parse_line(std::string_view text);

inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace artin
