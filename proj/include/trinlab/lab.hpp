#pragma once

// Run orchestration shared by the CLI and the test suites: configuration,
// id selection, the verify and conjecture sweeps, summaries and report
// persistence. Reports are byte-identical for any worker count: tasks are
// enumerated deterministically, records are sorted, and the run id is a
// hash of the configuration (excluding workers and output path).

#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "trinlab/congruences.hpp"
#include "trinlab/conjectures.hpp"
#include "trinlab/identities.hpp"
#include "trinlab/report.hpp"

namespace trinlab {

struct RunConfig {
  std::vector<std::string> ids = {"*"};
  i64 pmin = 3;
  i64 pmax = 100;
  i64 nmax = 100;
  Grid grid;
  int workers = 0;  // 0: pick from hardware
  std::string out = "report.jsonl";
  std::string format = "jsonl";

  void validate() const {
    if (pmin < 3) throw std::invalid_argument("prime-min must be >= 3");
    if (nmax < 1) throw std::invalid_argument("n-max must be >= 1");
    if (workers < 0) throw std::invalid_argument("worker-count must be >= 1");
    if (format != "jsonl" && format != "csv") {
      throw std::invalid_argument("format must be jsonl or csv");
    }
    if (grid.lo1 > grid.hi1 || grid.lo2 > grid.hi2) {
      throw std::invalid_argument("grid bounds must be ordered");
    }
  }
};

inline int resolve_workers(const RunConfig& cfg) {
  if (cfg.workers > 0) return cfg.workers;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return static_cast<int>(hw > 8 ? 8 : hw);
}

/// Run id derived from the sweep-defining configuration; worker count and
/// output path deliberately excluded.
inline std::string config_run_id(const RunConfig& cfg) {
  std::string canon;
  for (const auto& id : cfg.ids) canon += id + ';';
  canon += std::to_string(cfg.pmin) + '|' + std::to_string(cfg.pmax) + '|' +
           std::to_string(cfg.nmax) + '|' + std::to_string(cfg.grid.lo1) + ':' +
           std::to_string(cfg.grid.hi1) + ',' + std::to_string(cfg.grid.lo2) + ':' +
           std::to_string(cfg.grid.hi2) + '|' + cfg.format;
  u64 h = 1469598103934665603ull;
  for (unsigned char ch : canon) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

struct RunSummary {
  std::size_t checked = 0, passed = 0, failed = 0, skipped = 0;
  std::size_t unresolved = 0, rep_missing = 0;
  std::size_t hypothesis_match = 0, hypothesis_mismatch = 0;
};

struct RunResult {
  std::vector<ReportRecord> records;
  RunSummary summary;
  std::vector<std::string> notes;
};

namespace detail {

inline void tally(RunSummary& s, const std::string& status) {
  ++s.checked;
  if (status == "pass") ++s.passed;
  else if (status == "fail") ++s.failed;
  else if (status == "skipped") ++s.skipped;
  else if (status == "unresolved") ++s.unresolved;
  else if (status == "representation-missing") ++s.rep_missing;
}

}  // namespace detail

/// Identities and the congruence registry.
inline RunResult run_verify(const RunConfig& cfg) {
  cfg.validate();
  int workers = resolve_workers(cfg);

  std::vector<IdentitySpec> id_specs;
  for (auto& spec : identity_registry()) {
    if (id_selected(cfg.ids, spec.id)) id_specs.push_back(std::move(spec));
  }
  std::vector<CongruenceSpec> cong_specs;
  for (auto& spec : builtin_registry()) {
    if (id_selected(cfg.ids, spec.id)) cong_specs.push_back(std::move(spec));
  }
  if (id_specs.empty() && cong_specs.empty()) {
    throw std::invalid_argument("no identity or congruence ids match the selection");
  }

  struct IdTask {
    const IdentitySpec* spec;
    Instance instance;
  };
  std::vector<IdTask> id_tasks;
  for (const auto& spec : id_specs) {
    for (const auto& inst : spec.instances(cfg.grid)) id_tasks.push_back({&spec, inst});
  }
  auto id_chunks = parallel_map<std::vector<ReportRecord>>(
      id_tasks.size(), workers, [&](std::size_t idx) {
        const auto& task = id_tasks[idx];
        std::vector<ReportRecord> out;
        out.reserve(static_cast<std::size_t>(cfg.nmax));
        for (i64 n = 1; n <= cfg.nmax; ++n) {
          out.push_back(to_record(task.spec->eval(n, task.instance)));
        }
        return out;
      });

  auto cong_outcomes = run_registry(cong_specs, cfg.pmin, cfg.pmax, cfg.grid, workers);

  RunResult result;
  for (auto& chunk : id_chunks) {
    for (auto& rec : chunk) result.records.push_back(std::move(rec));
  }
  for (const auto& outcome : cong_outcomes) {
    result.records.push_back(to_record(outcome, "congruence"));
  }
  std::string run_id = config_run_id(cfg);
  for (auto& rec : result.records) {
    rec.run_id = run_id;
    detail::tally(result.summary, rec.status);
  }
  sort_records(result.records);
  return result;
}

/// The conjecture registry, with the hypothesis side channel and the overlap
/// cross-check between Conjecture 1.1(ii)'s fourth congruence and
/// Conjecture 5.4 at (b,c) = (1,1) reported as notes.
inline RunResult run_conjecture_suite(const RunConfig& cfg) {
  cfg.validate();
  int workers = resolve_workers(cfg);

  std::vector<ConjectureSpec> specs;
  for (auto& spec : conjecture_registry()) {
    if (id_selected(cfg.ids, spec.id)) specs.push_back(std::move(spec));
  }
  if (specs.empty()) throw std::invalid_argument("no conjecture ids match the selection");

  auto outcomes = run_conjectures(specs, cfg.pmin, cfg.pmax, cfg.nmax, cfg.grid, workers);

  RunResult result;
  std::map<i64, Status> overlap_a, overlap_b;
  for (const auto& outcome : outcomes) {
    if (outcome.spec_id == "c1.1-ii.d" && outcome.status != Status::skipped) {
      overlap_a[outcome.instance.at("p")] = outcome.status;
    }
    if (outcome.spec_id == "c5.4-prime" && outcome.status != Status::skipped) {
      auto b = outcome.instance.find("b");
      auto c = outcome.instance.find("c");
      if (b != outcome.instance.end() && b->second == 1 && c != outcome.instance.end() &&
          c->second == 1) {
        overlap_b[outcome.instance.at("p")] = outcome.status;
      }
    }
    result.records.push_back(to_record(outcome, "conjecture"));
    if (outcome.status == Status::unresolved) {
      if (outcome.hypothesis_match) ++result.summary.hypothesis_match;
      else ++result.summary.hypothesis_mismatch;
    }
  }
  for (const auto& [p, status] : overlap_a) {
    auto it = overlap_b.find(p);
    if (it != overlap_b.end() && it->second != status) {
      result.notes.push_back("cross-check disagreement at p=" + std::to_string(p) +
                             ": c1.1-ii.d=" + to_string(status) +
                             " c5.4-prime(1,1)=" + to_string(it->second));
    }
  }
  std::string run_id = config_run_id(cfg);
  for (auto& rec : result.records) {
    rec.run_id = run_id;
    detail::tally(result.summary, rec.status);
  }
  sort_records(result.records);
  return result;
}

inline void write_report(const RunConfig& cfg, const std::vector<ReportRecord>& records) {
  if (cfg.format == "csv") {
    write_csv(cfg.out, records);
  } else {
    write_jsonl(cfg.out, records);
  }
}

}  // namespace trinlab
