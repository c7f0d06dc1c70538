#include "artin/report.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace artin {
namespace {

using nlohmann::json;

const char* verdict_name(PrStatus v) {
  switch (v) {
    case PrStatus::PrimitiveRoot: return "primitive_root";
    case PrStatus::NotPrimitiveRoot: return "not_primitive_root";
    case PrStatus::DividesG: return "divides_g";
  }
  return "?";
}

PrStatus verdict_value(const std::string& s) {
  if (s == "primitive_root") return PrStatus::PrimitiveRoot;
  if (s == "not_primitive_root") return PrStatus::NotPrimitiveRoot;
  if (s == "divides_g") return PrStatus::DividesG;
  throw std::invalid_argument("report: unknown verdict '" + s + "'");
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

CheckStatus status_value(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "inconclusive") return CheckStatus::Inconclusive;
  throw std::invalid_argument("report: unknown status '" + s + "'");
}

u128 wide_field(const json& j, const char* key) {
  const auto v = parse_u128(j.at(key).get<std::string>());
  if (!v) throw std::invalid_argument(std::string("report: bad wide field ") + key);
  return *v;
}

}  // namespace

std::string to_line(const ReportLine& line) {
  json j;
  if (const auto* ev = std::get_if<ArtinEvent>(&line)) {
    j["kind"] = "event";
    j["j"] = ev->sequence_index;
    j["n"] = ev->n;
    j["p"] = to_string(ev->p);
    j["verdict"] = verdict_name(ev->verdict);
    j["duplicate"] = ev->duplicate;
  } else if (const auto* s = std::get_if<SummaryLine>(&line)) {
    const RunReport& r = s->report;
    j["kind"] = "summary";
    j["version"] = s->version;
    j["fingerprint"] = s->fingerprint;
    j["r"] = r.r;
    j["c"] = r.c;
    if (r.first_failure) {
      j["first_failure"] = {{"n", r.first_failure->first},
                            {"p", to_string(r.first_failure->second)}};
    } else {
      j["first_failure"] = nullptr;
    }
    j["n_begin"] = r.n_begin;
    j["n_end"] = r.n_end;
    j["evaluated"] = r.counts.evaluated;
    j["prime"] = r.counts.prime;
    j["skipped_divides_g"] = r.counts.skipped_divides_g;
    j["terminated"] = r.terminated == Terminated::FailureFound
                          ? "failure_found"
                          : "range_exhausted";
  } else if (const auto* p = std::get_if<ProgressLine>(&line)) {
    j["kind"] = "progress";
    j["done"] = p->done;
    j["total"] = p->total;
    j["elapsed_ms"] = p->elapsed_ms;
  } else {
    const auto& v = std::get<VerificationLine>(line);
    j["kind"] = "verification";
    j["check"] = v.check;
    j["status"] = status_name(v.status);
    j["detail"] = v.detail;
  }
  return j.dump();
}

ReportLine parse_line(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("report: bad JSON: ") + e.what());
  }
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "event") {
      ArtinEvent ev;
      ev.sequence_index = j.at("j").get<std::uint64_t>();
      ev.n = j.at("n").get<std::uint64_t>();
      ev.p = wide_field(j, "p");
      ev.verdict = verdict_value(j.at("verdict").get<std::string>());
      ev.duplicate = j.at("duplicate").get<bool>();
      return ev;
    }
    if (kind == "summary") {
      SummaryLine s;
      s.version = j.at("version").get<std::string>();
      s.fingerprint = j.at("fingerprint").get<std::string>();
      RunReport& r = s.report;
      r.r = j.at("r").get<std::uint64_t>();
      r.c = j.at("c").get<std::uint64_t>();
      if (!j.at("first_failure").is_null()) {
        const json& ff = j.at("first_failure");
        r.first_failure = {ff.at("n").get<std::uint64_t>(), wide_field(ff, "p")};
      }
      r.n_begin = j.at("n_begin").get<std::uint64_t>();
      r.n_end = j.at("n_end").get<std::uint64_t>();
      r.counts.evaluated = j.at("evaluated").get<std::uint64_t>();
      r.counts.prime = j.at("prime").get<std::uint64_t>();
      r.counts.skipped_divides_g = j.at("skipped_divides_g").get<std::uint64_t>();
      const std::string term = j.at("terminated").get<std::string>();
      if (term == "failure_found") r.terminated = Terminated::FailureFound;
      else if (term == "range_exhausted") r.terminated = Terminated::RangeExhausted;
      else throw std::invalid_argument("report: unknown terminated '" + term + "'");
      return s;
    }
    if (kind == "progress") {
      ProgressLine p;
      p.done = j.at("done").get<std::uint64_t>();
      p.total = j.at("total").get<std::uint64_t>();
      p.elapsed_ms = j.at("elapsed_ms").get<std::uint64_t>();
      return p;
    }
    if (kind == "verification") {
      VerificationLine v;
      v.check = j.at("check").get<std::string>();
      v.status = status_value(j.at("status").get<std::string>());
      v.detail = j.at("detail").get<std::string>();
      return v;
    }
    throw std::invalid_argument("report: unknown kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report: malformed line: ") + e.what());
  }
}

}  // namespace artin
