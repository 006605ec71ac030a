// Command-line front end: sequence tables, the proven identity/congruence
// suites and the conjecture sweep, with JSON-lines / CSV reports.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trinlab/lab.hpp"
#include "trinlab/sequences.hpp"

namespace {

using namespace trinlab;

struct SweepOptions {
  std::vector<std::string> ids;
  std::string grid_text;
  std::string config_path;
  CLI::App* cmd = nullptr;
  RunConfig cfg;
};

void add_sweep_options(CLI::App* cmd, SweepOptions& opt) {
  opt.cmd = cmd;
  cmd->add_option("--ids", opt.ids, "spec ids to run (glob patterns)")->delimiter(',');
  cmd->add_option("--pmin", opt.cfg.pmin, "smallest prime (>= 3)");
  cmd->add_option("--pmax", opt.cfg.pmax, "largest prime");
  cmd->add_option("--nmax", opt.cfg.nmax, "largest index for n-indexed claims");
  cmd->add_option("--grid", opt.grid_text, "parameter grid \"bmin:bmax,cmin:cmax\"");
  cmd->add_option("--workers", opt.cfg.workers, "worker thread count (>= 1)");
  cmd->add_option("--out", opt.cfg.out, "report path");
  cmd->add_option("--format", opt.cfg.format, "report format: jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  cmd->add_option("--config", opt.config_path, "key=value config file (flags take precedence)");
}

// key=value configuration; a key applies only when the matching flag was not
// given on the command line. '#' starts a comment.
void apply_config_file(SweepOptions& opt) {
  if (opt.config_path.empty()) return;
  std::ifstream in(opt.config_path);
  if (!in) throw std::invalid_argument("cannot read config file " + opt.config_path);
  auto unset = [&](const char* flag) { return opt.cmd->count(flag) == 0; };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) line.pop_back();
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(opt.config_path + ":" + std::to_string(lineno) +
                                  ": expected key=value");
    }
    std::string key = line.substr(0, eq), value = line.substr(eq + 1);
    if (key == "ids") {
      if (unset("--ids")) {
        opt.ids.clear();
        std::size_t pos = 0;
        while (pos <= value.size()) {
          auto comma = value.find(',', pos);
          if (comma == std::string::npos) comma = value.size();
          if (comma > pos) opt.ids.push_back(value.substr(pos, comma - pos));
          pos = comma + 1;
        }
      }
    } else if (key == "pmin") {
      if (unset("--pmin")) opt.cfg.pmin = std::stoll(value);
    } else if (key == "pmax") {
      if (unset("--pmax")) opt.cfg.pmax = std::stoll(value);
    } else if (key == "nmax") {
      if (unset("--nmax")) opt.cfg.nmax = std::stoll(value);
    } else if (key == "grid") {
      if (unset("--grid")) opt.grid_text = value;
    } else if (key == "workers") {
      if (unset("--workers")) opt.cfg.workers = static_cast<int>(std::stoll(value));
    } else if (key == "out") {
      if (unset("--out")) opt.cfg.out = value;
    } else if (key == "format") {
      if (unset("--format")) opt.cfg.format = value;
    } else {
      throw std::invalid_argument(opt.config_path + ": unknown key " + key);
    }
  }
}

Grid parse_grid(const std::string& text) {
  Grid g;
  if (text.empty()) return g;
  long long a, b, c, d;
  if (std::sscanf(text.c_str(), "%lld:%lld,%lld:%lld", &a, &b, &c, &d) != 4) {
    throw std::invalid_argument("grid must look like \"-8:8,-8:8\"");
  }
  g.lo1 = a;
  g.hi1 = b;
  g.lo2 = c;
  g.hi2 = d;
  return g;
}

RunConfig finalize(SweepOptions& opt) {
  apply_config_file(opt);
  if (!opt.ids.empty()) opt.cfg.ids = opt.ids;
  opt.cfg.grid = parse_grid(opt.grid_text);
  opt.cfg.validate();
  return opt.cfg;
}

int report_and_exit(const RunConfig& cfg, const RunResult& result, bool conjecture_mode) {
  write_report(cfg, result.records);
  const auto& s = result.summary;
  std::printf("checked %zu, passed %zu, skipped %zu, failed %zu", s.checked, s.passed, s.skipped,
              s.failed);
  if (conjecture_mode) {
    std::printf(", unresolved %zu, representation-missing %zu", s.unresolved, s.rep_missing);
    if (s.unresolved > 0) {
      std::printf(" (hypothesis held %zu/%zu)", s.hypothesis_match,
                  s.hypothesis_match + s.hypothesis_mismatch);
    }
  }
  std::printf("\n");
  for (const auto& note : result.notes) std::printf("note: %s\n", note.c_str());
  if (s.failed > 0) {
    for (const auto& rec : result.records) {
      if (rec.status == "fail") {
        std::printf("witness: %s\n", serialize_record(rec).c_str());
        break;
      }
    }
    return 1;
  }
  return 0;
}

int cmd_seq(const std::string& family, i64 b, i64 c, i64 x, i64 A, i64 B, i64 to) {
  if (to < 0) throw std::invalid_argument("--to must be nonnegative");
  std::size_t count = static_cast<std::size_t>(to) + 1;
  std::vector<Int> values;
  if (family == "T") {
    values = trinomial_list(SeqParams{Int(b), Int(c)}, count);
  } else if (family == "M") {
    values = motzkin_list(SeqParams{Int(b), Int(c)}, count);
  } else if (family == "D") {
    for (i64 n = 0; n <= to; ++n) values.push_back(delannoy(n, Int(x)));
  } else if (family == "catalan") {
    for (i64 n = 0; n <= to; ++n) values.push_back(catalan(n));
  } else if (family == "central-binom") {
    for (i64 n = 0; n <= to; ++n) values.push_back(central_binomial(n));
  } else if (family == "lucas") {
    for (i64 n = 0; n <= to; ++n) values.push_back(lucas_u(n, LucasParams{Int(A), Int(B)}));
  } else if (family == "euler") {
    for (i64 n = 0; n <= to; ++n) values.push_back(euler_number(n));
  } else {
    throw CLI::ValidationError("family must be one of T|M|D|catalan|central-binom|lucas|euler");
  }
  for (i64 n = 0; n <= to; ++n) {
    std::printf("%lld\t%s\n", static_cast<long long>(n),
                values[static_cast<std::size_t>(n)].get_str().c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification lab for central trinomial, Motzkin and Delannoy congruences"};
  app.require_subcommand(1);

  auto* seq = app.add_subcommand("seq", "print a sequence table, one \"n<TAB>value\" per line");
  std::string family;
  i64 b = 1, c = 1, x = 1, A = 1, B = -1, to = 10;
  seq->add_option("family", family, "T|M|D|catalan|central-binom|lucas|euler")->required();
  seq->add_option("--b", b, "b parameter for T and M");
  seq->add_option("--c", c, "c parameter for T and M");
  seq->add_option("--x", x, "evaluation point for D");
  seq->add_option("--A", A, "A parameter for lucas");
  seq->add_option("--B", B, "B parameter for lucas");
  seq->add_option("--to", to, "largest index, inclusive")->required();

  auto* verify = app.add_subcommand("verify", "run the proven identity and congruence suites");
  SweepOptions vopt;
  add_sweep_options(verify, vopt);

  auto* conjecture = app.add_subcommand("conjecture", "run the conjecture falsification sweep");
  SweepOptions copt;
  copt.cfg.out = "conjecture-report.jsonl";
  add_sweep_options(conjecture, copt);

  try {
    app.parse(argc, argv);
    if (seq->parsed()) return cmd_seq(family, b, c, x, A, B, to);
    if (verify->parsed()) {
      RunConfig cfg = finalize(vopt);
      return report_and_exit(cfg, run_verify(cfg), false);
    }
    RunConfig cfg = finalize(copt);
    return report_and_exit(cfg, run_conjecture_suite(cfg), true);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
