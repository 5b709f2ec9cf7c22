#include "cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/scan_io.hpp"
#include "straus/arith.hpp"
#include "straus/crosscheck.hpp"
#include "straus/oracle.hpp"
#include "straus/report.hpp"
#include "straus/scan.hpp"

namespace straus::cli {
namespace {

using nlohmann::ordered_json;

int code(ExitCode c) { return static_cast<int>(c); }

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << content;
  f.flush();
  if (!f) throw IoError("write to '" + path + "' failed");
}

struct Options {
  bool json = false;

  u64 check_p = 0;
  bool check_first = false;

  u64 solve_n = 0;
  u64 cap = kOracleDefaultCap;

  u64 lo = 0;
  u64 hi = 0;
  bool exhaustive = false;
  unsigned threads = 0;
  std::string out_path;
  std::string summary_path;

  int table_type = 1;
  u64 table_hi = 100;

  std::string svg_path;
  std::string csv_path;

  u64 divisor_hi = 0;
};

// check ---------------------------------------------------------------------

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  if (!is_prime(o.check_p)) {
    err << "check: " << o.check_p << " is not prime\n";
    return code(ExitCode::kUsage);
  }
  const u64 p = o.check_p;
  const XRange r = x_range(p);
  std::vector<Witness> ws;
  if (o.check_first) {
    if (auto w = first_witness(p)) ws.push_back(*w);
  } else {
    ws = enumerate_witnesses(p);
  }

  ordered_json rows = ordered_json::array();
  u64 count[2] = {0, 0};
  bool all_ok = true;
  if (!o.json) {
    out << "p = " << p << ", x in [" << r.lo << ", " << r.hi << "]\n";
    out << std::left << std::setw(6) << "type" << std::setw(12) << "x" << std::setw(10) << "k" << std::setw(16) << "d"
        << std::setw(24) << "y" << std::setw(32) << "z"
        << "identity\n";
  }
  for (const Witness& w : ws) {
    const Solution s = build_solution(w);
    const bool ok = verify_identity(p, s.x, s.y, s.z);
    all_ok = all_ok && ok;
    ++count[w.type == SolutionType::TypeI ? 0 : 1];
    if (o.json) {
      ordered_json j = witness_json(w);
      j["y"] = to_string(s.y);
      j["z"] = to_string(s.z);
      j["identity"] = ok;
      rows.push_back(std::move(j));
    } else {
      out << std::left << std::setw(6) << to_string(w.type) << std::setw(12) << w.x << std::setw(10) << w.k()
          << std::setw(16) << w.d << std::setw(24) << to_string(s.y) << std::setw(32) << to_string(s.z)
          << (ok ? "ok" : "FAIL") << '\n';
    }
  }
  if (o.json) {
    ordered_json j;
    j["p"] = p;
    j["x_range"] = {r.lo, r.hi};
    j["witnesses"] = std::move(rows);
    j["type1_count"] = count[0];
    j["type2_count"] = count[1];
    out << j.dump(2) << '\n';
  } else {
    out << count[0] << " type I, " << count[1] << " type II witness(es)\n";
  }
  if (ws.empty()) {
    err << "check: no witness for p=" << p << '\n';
    return code(ExitCode::kCounterexample);
  }
  return all_ok ? code(ExitCode::kOk) : code(ExitCode::kCorrespondence);
}

// solve ---------------------------------------------------------------------

int cmd_solve(const Options& o, std::ostream& out) {
  const std::vector<Triple> sols = solve_bruteforce(o.solve_n, o.cap);
  if (o.json) {
    ordered_json j;
    j["n"] = o.solve_n;
    ordered_json arr = ordered_json::array();
    for (const Triple& t : sols) arr.push_back({t.x, t.y, t.z});
    j["solutions"] = std::move(arr);
    out << j.dump(2) << '\n';
  } else {
    for (const Triple& t : sols) out << t.x << ' ' << t.y << ' ' << t.z << '\n';
    out << sols.size() << " solution(s) of 4/" << o.solve_n << " = 1/x + 1/y + 1/z\n";
  }
  return code(ExitCode::kOk);
}

// scan ----------------------------------------------------------------------

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
  ScanOptions opts;
  opts.threads = o.threads;
  const ScanReport report = scan_primes(o.lo, o.hi, o.exhaustive ? ScanMode::Exhaustive : ScanMode::FirstOnly, opts);
  const ordered_json summary = summary_json(report);

  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + o.out_path + "' for writing");
    write_jsonl(report, f);
    f.flush();
    if (!f) throw IoError("write to '" + o.out_path + "' failed");
    const std::string summary_path = o.summary_path.empty() ? o.out_path + ".summary.json" : o.summary_path;
    write_file(summary_path, summary.dump(2) + "\n");
  }

  if (o.json) {
    ordered_json j = summary;
    j["elapsed_seconds"] = report.elapsed_seconds;
    out << j.dump(2) << '\n';
  } else {
    out << "scanned " << report.records.size() << " primes in [" << report.lo << ", " << report.hi << "] ("
        << to_string(report.mode) << ") in " << std::fixed << std::setprecision(3) << report.elapsed_seconds
        << " s\n";
    out.unsetf(std::ios::fixed);
    u64 max_k = 0, max_p = 0;
    for (const ScanRecord& rec : report.records) {
      if (rec.first && rec.first->k() >= max_k) {
        max_k = rec.first->k();
        max_p = rec.p;
      }
    }
    if (!report.records.empty()) out << "largest first-witness offset k=" << max_k << " at p=" << max_p << '\n';
    out << "counterexamples: " << report.counterexamples.size() << '\n';
  }
  for (u64 p : report.counterexamples) err << "no witness for p=" << p << '\n';
  return report.counterexamples.empty() ? code(ExitCode::kOk) : code(ExitCode::kCounterexample);
}

// table / figure -------------------------------------------------------------

int cmd_table(const Options& o, std::ostream& out) {
  const SolutionType type = o.table_type == 1 ? SolutionType::TypeI : SolutionType::TypeII;
  const auto rows = k_table(o.table_hi, type);
  const std::string text = o.json ? k_table_json(rows) : k_table_csv(rows);
  if (o.out_path.empty()) {
    out << text;
  } else {
    write_file(o.out_path, text);
  }
  return code(ExitCode::kOk);
}

int cmd_figure(const Options& o, std::ostream& out) {
  const auto points = figure_points(o.table_hi);
  if (!o.svg_path.empty()) write_file(o.svg_path, render_scatter(points));
  if (!o.csv_path.empty()) write_file(o.csv_path, figure_points_csv(points));
  if (o.json) {
    ordered_json arr = ordered_json::array();
    for (const FigurePoint& pt : points) arr.push_back({pt.p, pt.x});
    out << arr.dump() << '\n';
  } else if (o.svg_path.empty() && o.csv_path.empty()) {
    out << figure_points_csv(points);
  } else {
    out << points.size() << " points\n";
  }
  return code(ExitCode::kOk);
}

// compare / properties -------------------------------------------------------

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.lo < 2 || o.lo > o.hi) throw DomainError("compare: need 2 <= lo <= hi");
  if (o.hi > o.cap) throw ResourceLimitError("compare: hi exceeds oracle cap " + std::to_string(o.cap));
  u64 primes = 0, solutions[2] = {0, 0};
  std::vector<u64> failed;
  ordered_json failures = ordered_json::array();
  for (u64 p : primes_in_range(o.lo, o.hi)) {
    const CrossCheckResult r = cross_check_prime(p, o.cap);
    ++primes;
    solutions[0] += r.oracle_count[0];
    solutions[1] += r.oracle_count[1];
    if (!r.ok()) {
      failed.push_back(p);
      for (const auto& m : r.mismatches) {
        err << m << '\n';
        failures.push_back(m);
      }
    }
  }
  if (o.json) {
    ordered_json j;
    j["lo"] = o.lo;
    j["hi"] = o.hi;
    j["primes"] = primes;
    j["type1_solutions"] = solutions[0];
    j["type2_solutions"] = solutions[1];
    j["failed_primes"] = failed;
    j["mismatches"] = std::move(failures);
    out << j.dump(2) << '\n';
  } else {
    out << "compared " << primes << " primes, " << solutions[0] << " type I and " << solutions[1]
        << " type II solutions\n";
    out << (failed.empty() ? "witnesses and oracle agree\n" : "DISAGREEMENT\n");
    for (u64 p : failed) out << "mismatch at p=" << p << '\n';
  }
  return failed.empty() ? code(ExitCode::kOk) : code(ExitCode::kCorrespondence);
}

int cmd_properties(const Options& o, std::ostream& out) {
  const u64 divisor_hi = o.divisor_hi != 0 ? o.divisor_hi : o.hi;
  const auto k0 = check_k0_type1_rule(o.hi);
  const auto divk = check_divisor_k_rule(divisor_hi);
  if (o.json) {
    ordered_json j;
    j["k0_type1_rule"] = {{"hi", o.hi}, {"violations", k0}};
    ordered_json pairs = ordered_json::array();
    for (const auto& [p, k] : divk) pairs.push_back({p, k});
    j["divisor_k_rule"] = {{"hi", divisor_hi}, {"violations", pairs}};
    out << j.dump(2) << '\n';
  } else {
    out << "k=0 type I rule (p <= " << o.hi << ", p != 2, p mod 24 != 1): " << k0.size() << " violation(s)\n";
    for (u64 p : k0) out << "  p=" << p << '\n';
    out << "divisor-k type I rule (p <= " << divisor_hi << ", p mod 4 = 3): " << divk.size() << " violation(s)\n";
    for (const auto& [p, k] : divk) out << "  p=" << p << " k=" << k << '\n';
  }
  return k0.empty() && divk.empty() ? code(ExitCode::kOk) : code(ExitCode::kCounterexample);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Erdos-Straus witness search, brute-force cross-check and prime scans", "straus"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable JSON output");

  auto* check = app.add_subcommand("check", "List every witness and built solution for a prime");
  check->add_option("p", o.check_p, "Prime")->required();
  check->add_flag("--first", o.check_first, "Only the first witness");

  auto* solve = app.add_subcommand("solve", "Brute-force all x <= y <= z with 4/n = 1/x + 1/y + 1/z");
  solve->add_option("n", o.solve_n, "n >= 2")->required();
  solve->add_option("--cap", o.cap, "Largest n the oracle accepts");

  auto* scan = app.add_subcommand("scan", "Search witnesses for every prime in [lo, hi]");
  scan->add_option("lo", o.lo)->required();
  scan->add_option("hi", o.hi)->required();
  scan->add_flag("--exhaustive", o.exhaustive, "Collect all witnesses, not just the first");
  scan->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  scan->add_option("--out", o.out_path, "JSON-lines file, one record per prime");
  scan->add_option("--summary", o.summary_path, "Summary JSON file (default: <out>.summary.json)");

  auto* table = app.add_subcommand("table", "k-value table for type 1 or 2 (CSV, or JSON with --json)");
  table->add_option("type", o.table_type)->required()->check(CLI::IsMember({1, 2}));
  table->add_option("--hi", o.table_hi, "Largest prime considered");
  table->add_option("--out", o.out_path, "Write to file instead of stdout");

  auto* figure = app.add_subcommand("figure", "Scatter of (p, x) pairs admitting a witness");
  figure->add_option("--hi", o.table_hi, "Largest prime considered");
  figure->add_option("--svg", o.svg_path, "SVG output file");
  figure->add_option("--csv", o.csv_path, "Points CSV output file");

  auto* compare = app.add_subcommand("compare", "Cross-check witnesses against the brute-force oracle");
  compare->add_option("lo", o.lo)->required();
  compare->add_option("hi", o.hi)->required();
  compare->add_option("--cap", o.cap, "Oracle cap");

  auto* properties = app.add_subcommand("properties", "Check the k=0 and divisor-k type I rules");
  properties->add_option("hi", o.hi)->required();
  properties->add_option("--divisor-hi", o.divisor_hi, "Separate bound for the divisor-k rule");

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", o.json, "Machine-readable JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return code(ExitCode::kOk);
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return code(ExitCode::kUsage);
  }

  try {
    if (check->parsed()) return cmd_check(o, out, err);
    if (solve->parsed()) return cmd_solve(o, out);
    if (scan->parsed()) return cmd_scan(o, out, err);
    if (table->parsed()) return cmd_table(o, out);
    if (figure->parsed()) return cmd_figure(o, out);
    if (compare->parsed()) return cmd_compare(o, out, err);
    if (properties->parsed()) return cmd_properties(o, out);
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return code(ExitCode::kIo);
  } catch (const CorrespondenceViolation& e) {
    err << e.what() << '\n';
    return code(ExitCode::kCorrespondence);
  } catch (const InternalConsistencyError& e) {
    err << e.what() << '\n';
    return code(ExitCode::kCorrespondence);
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return code(ExitCode::kUsage);
  }
  return code(ExitCode::kUsage);
}

}  // namespace straus::cli
