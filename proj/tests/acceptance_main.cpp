// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything is exact; tolerance is zero throughout.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "trinlab/lab.hpp"

using namespace trinlab;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct StatusCounts {
  std::size_t fail = 0, pass = 0, skipped = 0, unresolved = 0, rep_missing = 0;
  std::string first_fail;
};

StatusCounts tally(const std::vector<CheckOutcome>& outcomes) {
  StatusCounts c;
  for (const auto& out : outcomes) {
    switch (out.status) {
      case Status::pass: ++c.pass; break;
      case Status::skipped: ++c.skipped; break;
      case Status::unresolved: ++c.unresolved; break;
      case Status::representation_missing: ++c.rep_missing; break;
      case Status::fail:
        ++c.fail;
        if (c.first_fail.empty()) {
          c.first_fail = out.spec_id;
          for (const auto& [k, v] : out.instance) {
            c.first_fail += " " + k + "=" + std::to_string(v);
          }
        }
        break;
    }
  }
  return c;
}

// 1. Every congruence registry entry over p <= 500, |b|,|c|,|m|,|x| <= 8.
void criterion1() {
  Grid grid;  // +/- 8 defaults
  auto outcomes = run_registry(builtin_registry(), 3, 500, grid, 2);
  auto counts = tally(outcomes);
  report(1, "theorem congruence registry, p <= 500, grid 8", counts.fail == 0,
         "checked " + std::to_string(outcomes.size()) + ", passed " + std::to_string(counts.pass) +
             ", skipped " + std::to_string(counts.skipped) +
             (counts.fail ? ", first fail " + counts.first_fail : ""));
}

// 2. Exact identities for n <= 150 over (b,c) in [-6,6]^2 plus 50 randomized
// larger instances.
void criterion2() {
  Grid grid{-6, 6, -6, 6};
  std::size_t checked = 0, failures = 0;
  std::string first;
  auto note = [&](const IdentityCase& c) {
    ++checked;
    if (!c.pass && failures++ == 0) first = c.id;
  };
  std::vector<IdentitySpec> specs;
  for (auto& spec : identity_registry()) {
    if (spec.id.rfind("div-", 0) == 0) continue;  // criterion 3 owns these
    specs.push_back(std::move(spec));
  }
  struct Task {
    const IdentitySpec* spec;
    Instance inst;
  };
  std::vector<Task> tasks;
  for (const auto& spec : specs) {
    for (const auto& inst : spec.instances(grid)) tasks.push_back({&spec, inst});
  }
  auto chunks = parallel_map<std::size_t>(tasks.size(), 2, [&](std::size_t i) {
    std::size_t bad = 0;
    for (i64 n = 1; n <= 150; ++n) {
      if (!tasks[i].spec->eval(n, tasks[i].inst).pass) ++bad;
    }
    return bad;
  });
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    checked += 150;
    if (chunks[i] > 0 && failures == 0) first = tasks[i].spec->id;
    failures += chunks[i];
  }

  std::mt19937_64 rng(7u);
  std::uniform_int_distribution<i64> pick_n(1, 80), pick_bc(-50, 50), pick_k(0, 50);
  for (int trial = 0; trial < 50; ++trial) {
    i64 n = pick_n(rng), b = pick_bc(rng), c = pick_bc(rng), m = pick_bc(rng), k = pick_k(rng);
    if (c == 0) c = 1;
    note(id_1_15(n, m));
    note(id_1_19(n, {Int(b), Int(c)}));
    note(id_1_20(n, {Int(b), Int(c)}));
    note(id_3_1(n, b, c));
    note(id_3_2(n, b, c));
    note(id_3_3(n, k));
    note(id_4_1(n, {Int(b), Int(c)}));
    note(id_4_2(n, k));
    note(id_s2_thm31(n, b));
    note(id_tauraso(n));
    note(id_su2_25(n % 40));
    note(id_un_vn(n));
    note(id_remark_1_1(n));
  }
  report(2, "exact identities, n <= 150 on (b,c) in [-6,6]^2 plus 50 randomized", failures == 0,
         "checked " + std::to_string(checked) + (failures ? ", first fail " + first : ""));
}

// 3. Divisibility families for n <= 300 at their stated parameter points.
void criterion3() {
  std::size_t checked = 0, failures = 0;
  std::string first;
  const std::pair<i64, i64> points[] = {{1, 1}, {1, -1}, {3, 2}, {2, 3}, {5, -3}};
  for (const char* fam : {"div-1.11", "div-1.12", "div-1.18", "div-1.20"}) {
    for (auto [b, c] : points) {
      for (i64 n = 1; n <= 300; ++n) {
        ++checked;
        auto out = check_divisibility(fam, n, {Int(b), Int(c)});
        if (!out.pass && failures++ == 0) first = out.id;
      }
    }
  }
  std::vector<ConjectureSpec> div_specs;
  for (auto& spec : conjecture_registry()) {
    if (spec.eval_div) div_specs.push_back(std::move(spec));
  }
  auto outcomes = run_conjectures(div_specs, 3, 2, 300, Grid{}, 2);
  auto counts = tally(outcomes);
  checked += outcomes.size();
  failures += counts.fail;
  if (failures && first.empty()) first = counts.first_fail;
  report(3, "divisibility families, n <= 300", failures == 0,
         "checked " + std::to_string(checked) + (failures ? ", first fail " + first : ""));
}

// 4. Spot numeric anchors, each recomputed from the definitional sums.
void criterion4() {
  Int t2 = 0, d2 = 0, wd = 0;
  for (i64 k = 0; k < 5; ++k) {
    Int t = trinomial(k, {1, 1});
    Int d = delannoy(k, Int(1));
    t2 += t * t;
    d2 += d * d;
    wd += (2 * k + 1) * d;
  }
  bool ok = t2 == 421 && t2 % 5 == 1;
  ok = ok && d2 == 107189 && d2 % 5 == 4;
  ok = ok && wd == 3405 && wd % 125 == 30 && (5 + 2 * 5 * (16 - 1)) % 125 == 30;
  Int morley = pow_int(Int(4), 4) - binomial(4, 2);
  ok = ok && morley == 250 && morley % 125 == 0;
  report(4, "spot numeric anchors", ok,
         "421, 107189, 3405 and Morley at p = 5 recomputed from definitional sums");
}

// 5. High-power congruences up to p <= 300.
void criterion5() {
  std::vector<CongruenceSpec> high;
  for (auto& spec : builtin_registry()) {
    if (spec.id == "eq1.22" || spec.id == "aux-r41c") high.push_back(std::move(spec));
  }
  auto outcomes = run_registry(high, 3, 300, Grid{}, 2);
  auto counts = tally(outcomes);
  std::vector<ConjectureSpec> c53;
  for (auto& spec : conjecture_registry()) {
    if (spec.id == "c5.3.a") c53.push_back(std::move(spec));
  }
  auto c53_out = run_conjectures(c53, 3, 300, 1, Grid{}, 2);
  std::size_t cube_branch = 0;
  for (const auto& out : c53_out) {
    auto counts2 = tally({out});
    counts.fail += counts2.fail;
    i64 p = out.instance.at("p");
    if (out.status == Status::pass && p % 4 == 1 &&
        out.modulus == static_cast<u64>(p) * p * p) {
      ++cube_branch;
    }
  }
  report(5, "high-power congruences (p^3, p^5) up to p <= 300",
         counts.fail == 0 && cube_branch > 0,
         "pass " + std::to_string(counts.pass) + " registry, " +
             std::to_string(cube_branch) + " mod-p^3 branch checks");
}

// 6. Conjecture sweep to p <= 500: zero fail; the ambiguous branch reports
// unresolved rather than fail.
void criterion6() {
  Grid grid;
  auto outcomes = run_conjectures(conjecture_registry(), 3, 500, 60, grid, 2);
  auto counts = tally(outcomes);
  report(6, "conjecture sweep, p <= 500", counts.fail == 0 && counts.unresolved > 0,
         "passed " + std::to_string(counts.pass) + ", unresolved " +
             std::to_string(counts.unresolved) + ", representation-missing " +
             std::to_string(counts.rep_missing) +
             (counts.fail ? ", first fail " + counts.first_fail : ""));
}

// 7. Oracle equivalence: the three T_n evaluation routes for n <= 300 over
// [-5,5]^2, and represent against a double-loop search below 10^4.
void criterion7() {
  std::vector<std::pair<i64, i64>> params;
  for (i64 b = -5; b <= 5; ++b) {
    for (i64 c = -5; c <= 5; ++c) params.push_back({b, c});
  }
  auto bad = parallel_map<int>(params.size(), 2, [&](std::size_t i) {
    auto [b, c] = params[i];
    SeqParams sp{Int(b), Int(c)};
    auto rec = trinomial_list(sp, 301);
    auto ser = trinomial_series(sp, 301);
    if (rec != ser) return 1;
    for (i64 n = 0; n <= 300; ++n) {
      if (trinomial(n, sp) != rec[static_cast<std::size_t>(n)]) return 1;
    }
    return 0;
  });
  int mismatches = 0;
  for (int b : bad) mismatches += b;

  const QuadForm forms[] = {{1, 6}, {2, 3}, {1, 1}, {1, 2}, {1, 3}, {1, 15}, {5, 3}};
  auto primes = sieve_primes(9999);
  for (const auto& form : forms) {
    for (i64 p : primes) {
      auto fast = represent(p, form);
      std::optional<QuadRep> brute;
      for (i64 x = 0; form.a * x * x <= p; ++x) {
        for (i64 y = 0; form.a * x * x + form.b * y * y <= p; ++y) {
          if (form.a * x * x + form.b * y * y == p) {
            if (!brute || y < brute->y || (y == brute->y && x < brute->x)) {
              brute = QuadRep{form, p, x, y};
            }
          }
        }
      }
      if (fast.has_value() != brute.has_value()) ++mismatches;
      else if (fast && (fast->x != brute->x || fast->y != brute->y)) ++mismatches;
    }
  }
  report(7, "oracle equivalence (three-way T_n, quadratic form search)", mismatches == 0,
         "grid [-5,5]^2 to n = 300; 7 forms below 10^4");
}

// 8. Byte-identical reports for different worker counts.
void criterion8() {
  RunConfig cfg;
  cfg.ids = {"eq1.3", "eq1.16", "eq1.21", "id_tauraso", "div-1.18", "lem2.2"};
  cfg.pmax = 100;
  cfg.nmax = 60;
  cfg.grid = {-4, 4, -4, 4};
  auto dir = std::filesystem::temp_directory_path() / "trinlab-acceptance";
  std::filesystem::remove_all(dir);
  cfg.workers = 1;
  cfg.out = (dir / "w1.jsonl").string();
  auto r1 = run_verify(cfg);
  write_report(cfg, r1.records);
  cfg.workers = 8;
  cfg.out = (dir / "w8.jsonl").string();
  auto r8 = run_verify(cfg);
  write_report(cfg, r8.records);
  bool ok = slurp(dir / "w1.jsonl") == slurp(dir / "w8.jsonl") && !r1.records.empty();
  std::filesystem::remove_all(dir);
  report(8, "determinism: workers 1 vs 8 yield byte-identical reports", ok,
         std::to_string(r1.records.size()) + " records compared");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
