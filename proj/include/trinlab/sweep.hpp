#pragma once

// Shared machinery for declarative check suites: parameter instances, grid
// enumeration, outcome records, id selection and the deterministic parallel
// runner. Workers are stateless; results land in task order, so reports are
// identical for any worker count.

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "trinlab/arith.hpp"

namespace trinlab {

/// One binding of the free symbols of a spec (b, c, m, x, A, B, n, ...).
using Instance = std::map<std::string, i64>;

inline i64 inst_get(const Instance& inst, const std::string& key) { return inst.at(key); }

/// Bounds for grid-swept symbols; c and B draw from the second range,
/// every other symbol from the first.
struct Grid {
  i64 lo1 = -8, hi1 = 8;
  i64 lo2 = -8, hi2 = 8;
};

inline std::vector<Instance> grid_instances(const std::vector<std::string>& symbols,
                                            const Grid& grid) {
  std::vector<Instance> out{{}};
  for (const auto& sym : symbols) {
    bool second = sym == "c" || sym == "B";
    i64 lo = second ? grid.lo2 : grid.lo1;
    i64 hi = second ? grid.hi2 : grid.hi1;
    std::vector<Instance> next;
    next.reserve(out.size() * static_cast<std::size_t>(hi - lo + 1));
    for (const auto& base : out) {
      for (i64 v = lo; v <= hi; ++v) {
        Instance inst = base;
        inst[sym] = v;
        next.push_back(std::move(inst));
      }
    }
    out = std::move(next);
  }
  return out;
}

enum class Status { pass, fail, skipped, representation_missing, unresolved };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    case Status::representation_missing: return "representation-missing";
    case Status::unresolved: return "unresolved";
  }
  return "?";
}

/// Result of one verification instance. For skipped outcomes lhs/rhs carry
/// no verdict and are left at zero with has_values = false.
struct CheckOutcome {
  std::string spec_id;
  Instance instance;  // includes "p" or "n"
  u64 modulus = 0;
  u64 lhs = 0;
  u64 rhs = 0;
  Status status = Status::skipped;
  bool has_values = false;
  bool hypothesis_match = false;  // side channel for unresolved claims
};

// ---------------------------------------------------------------------------
// Id selection: glob patterns with '*' and '?'. A pattern also selects every
// dotted or dashed sub-entry of an id it names exactly.
// ---------------------------------------------------------------------------

inline bool glob_match(std::string_view pat, std::string_view s) {
  std::size_t p = 0, i = 0, star = std::string_view::npos, mark = 0;
  while (i < s.size()) {
    if (p < pat.size() && (pat[p] == '?' || pat[p] == s[i])) {
      ++p;
      ++i;
    } else if (p < pat.size() && pat[p] == '*') {
      star = p++;
      mark = i;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      i = ++mark;
    } else {
      return false;
    }
  }
  while (p < pat.size() && pat[p] == '*') ++p;
  return p == pat.size();
}

inline bool id_selected(const std::vector<std::string>& patterns, const std::string& id) {
  for (const auto& pat : patterns) {
    if (glob_match(pat, id)) return true;
    if (glob_match(pat + ".*", id)) return true;
    if (glob_match(pat + "-*", id)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Deterministic parallel runner: a work queue of indexed tasks; the result
// vector is ordered by task index regardless of scheduling.
// ---------------------------------------------------------------------------

template <typename R, typename F>
std::vector<R> parallel_map(std::size_t task_count, int workers, F&& fn) {
  std::vector<R> results(task_count);
  if (task_count == 0) return results;
  if (workers < 1) workers = 1;
  if (workers == 1) {
    for (std::size_t i = 0; i < task_count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= task_count) return;
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        next.store(task_count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace trinlab
