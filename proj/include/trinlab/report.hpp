#pragma once

// Machine-readable reports: JSON lines (one record per check, the source of
// truth) and a CSV summary of per-spec counts. All big integers are decimal
// strings so consumers never lose precision to native number types. Files
// are written to a temp path and renamed, so an interrupted run never leaves
// a partial report at the final path.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "trinlab/identities.hpp"
#include "trinlab/sweep.hpp"

namespace trinlab {

struct ReportRecord {
  std::string schema_version = "1";
  std::string run_id;
  std::string spec_id;
  std::string kind;  // identity | congruence | conjecture
  std::map<std::string, std::string> instance;
  std::string modulus;  // "0" for exact equality
  std::string lhs, rhs;  // decimal (or "a/b"); empty when skipped
  std::string status;

  bool operator==(const ReportRecord&) const = default;
};

namespace detail {

/// Numeric order for decimal strings (optionally signed); non-numeric
/// strings (rationals, empties) order lexicographically after numbers.
inline int cmp_decimal(const std::string& a, const std::string& b) {
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  if (is_int(a) && is_int(b)) {
    bool na = a[0] == '-', nb = b[0] == '-';
    if (na != nb) return na ? -1 : 1;
    int sign = na ? -1 : 1;
    std::string da = a.substr(na ? 1 : 0), db = b.substr(nb ? 1 : 0);
    if (da.size() != db.size()) return (da.size() < db.size() ? -1 : 1) * sign;
    if (da != db) return (da < db ? -1 : 1) * sign;
    return 0;
  }
  if (a == b) return 0;
  return a < b ? -1 : 1;
}

}  // namespace detail

inline void sort_records(std::vector<ReportRecord>& records) {
  std::sort(records.begin(), records.end(), [](const ReportRecord& a, const ReportRecord& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.spec_id != b.spec_id) return a.spec_id < b.spec_id;
    int c = detail::cmp_decimal(a.modulus, b.modulus);
    if (c != 0) return c < 0;
    return a.instance < b.instance;
  });
}

inline ReportRecord to_record(const CheckOutcome& outcome, const std::string& kind) {
  ReportRecord rec;
  rec.spec_id = outcome.spec_id;
  rec.kind = kind;
  for (const auto& [key, value] : outcome.instance) rec.instance[key] = std::to_string(value);
  rec.modulus = std::to_string(outcome.modulus);
  if (outcome.has_values) {
    rec.lhs = std::to_string(outcome.lhs);
    rec.rhs = std::to_string(outcome.rhs);
  }
  rec.status = to_string(outcome.status);
  return rec;
}

inline ReportRecord to_record(const IdentityCase& c) {
  ReportRecord rec;
  rec.spec_id = c.id;
  rec.kind = "identity";
  for (const auto& [key, value] : c.instance) rec.instance[key] = std::to_string(value);
  rec.modulus = c.modulus.get_str();
  rec.lhs = c.lhs.get_str();
  rec.rhs = c.rhs.get_str();
  rec.status = c.pass ? "pass" : "fail";
  return rec;
}

inline std::string serialize_record(const ReportRecord& rec) {
  nlohmann::ordered_json j;
  j["schema-version"] = rec.schema_version;
  j["run-id"] = rec.run_id;
  j["spec-id"] = rec.spec_id;
  j["kind"] = rec.kind;
  j["instance"] = rec.instance;
  j["modulus"] = rec.modulus;
  j["lhs"] = rec.lhs;
  j["rhs"] = rec.rhs;
  j["status"] = rec.status;
  return j.dump();
}

inline ReportRecord parse_record(const std::string& line) {
  auto j = nlohmann::json::parse(line);
  ReportRecord rec;
  rec.schema_version = j.at("schema-version").get<std::string>();
  rec.run_id = j.at("run-id").get<std::string>();
  rec.spec_id = j.at("spec-id").get<std::string>();
  rec.kind = j.at("kind").get<std::string>();
  rec.instance = j.at("instance").get<std::map<std::string, std::string>>();
  rec.modulus = j.at("modulus").get<std::string>();
  rec.lhs = j.at("lhs").get<std::string>();
  rec.rhs = j.at("rhs").get<std::string>();
  rec.status = j.at("status").get<std::string>();
  return rec;
}

namespace detail {

inline void write_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace detail

inline void write_jsonl(const std::string& path, const std::vector<ReportRecord>& records) {
  std::string buf;
  for (const auto& rec : records) {
    buf += serialize_record(rec);
    buf += '\n';
  }
  detail::write_atomic(path, buf);
}

/// CSV summary: per-spec status counts, sorted by spec id.
inline void write_csv(const std::string& path, const std::vector<ReportRecord>& records) {
  struct Counts {
    std::size_t pass = 0, fail = 0, skipped = 0, rep_missing = 0, unresolved = 0;
  };
  std::map<std::string, Counts> by_spec;
  for (const auto& rec : records) {
    auto& c = by_spec[rec.spec_id];
    if (rec.status == "pass") ++c.pass;
    else if (rec.status == "fail") ++c.fail;
    else if (rec.status == "skipped") ++c.skipped;
    else if (rec.status == "representation-missing") ++c.rep_missing;
    else if (rec.status == "unresolved") ++c.unresolved;
  }
  std::string buf = "spec-id,pass,fail,skipped,representation-missing,unresolved\n";
  for (const auto& [id, c] : by_spec) {
    buf += id + ',' + std::to_string(c.pass) + ',' + std::to_string(c.fail) + ',' +
           std::to_string(c.skipped) + ',' + std::to_string(c.rep_missing) + ',' +
           std::to_string(c.unresolved) + '\n';
  }
  detail::write_atomic(path, buf);
}

}  // namespace trinlab
