// finsum: compute Dedekind/Hardy/B1 sums, check and scan identities,
// evaluate trigonometric representations, and print Fibonacci pairs.
//
// Exit codes: 0 pass, 1 identity failure, 2 usage or applicability error,
// 3 numerical pole.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "finsum/exact.hpp"
#include "finsum/fibonacci.hpp"
#include "finsum/finite_sums.hpp"
#include "finsum/registry.hpp"
#include "finsum/report.hpp"
#include "finsum/series.hpp"

namespace {

using namespace finsum;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPole = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Int> parse_ints(const std::vector<std::string>& raw) {
  std::vector<Int> out;
  out.reserve(raw.size());
  for (const std::string& s : raw) out.push_back(parse_int(s));
  return out;
}

Rational compute_sum(const std::string& name, const std::vector<Int>& a) {
  if (name == "Ymulti") return y_multi(a);
  if (a.size() != 2) throw UsageError("sum '" + name + "' takes exactly two integers h k");
  const Int& h = a[0];
  const Int& k = a[1];
  if (name == "dedekind") return dedekind_naive(h, k);
  if (name == "dedekind-fast") return dedekind_fast(h, k);
  if (name == "S") return hardy_sum(HardyKind::S, h, k);
  if (name == "s1") return hardy_sum(HardyKind::S1, h, k);
  if (name == "s2") return hardy_sum(HardyKind::S2, h, k);
  if (name == "s3") return hardy_sum(HardyKind::S3, h, k);
  if (name == "s4") return hardy_sum(HardyKind::S4, h, k);
  if (name == "s5") return hardy_sum(HardyKind::S5, h, k);
  if (name == "s5alt") return s5_alt(h, k);
  if (name == "mixed") return mixed_sum(h, k);
  if (name == "Y") return simsek_y(h, k);
  if (name == "C1") return c1_sum(h, k);
  if (name == "B1") return b1_sum(h, k);
  if (name == "B1-noj") return b1_variant_no_j(h, k);
  throw UsageError("unknown sum '" + name + "'");
}

OutputFormat resolve_format(const std::string& name) {
  const auto format = parse_output_format(name);
  if (!format) throw UsageError("unknown format '" + name + "' (expected human, json or csv)");
  return *format;
}

std::string default_format() {
  const char* env = std::getenv("FINSUM_FORMAT");
  return (env != nullptr && *env != '\0') ? std::string(env) : std::string("human");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Dedekind, Hardy-Berndt and B1 sums with identity checking"};
  app.require_subcommand(1);
  // -h would collide with the positional h; subcommands inherit this.
  app.set_help_flag("--help", "Print this help message and exit");

  std::string format_name = default_format();

  auto* compute = app.add_subcommand("compute", "Print the exact value of a sum");
  std::string sum_name;
  std::vector<std::string> sum_args;
  compute->add_option("sum", sum_name,
                      "dedekind | dedekind-fast | S | s1..s5 | s5alt | mixed | Y | C1 | B1 | B1-noj | Ymulti")
      ->required();
  compute->add_option("args", sum_args, "Integer arguments (h k, or a1 ... an for Ymulti)")->required();

  auto* check = app.add_subcommand("check", "Check one identity at one pair");
  std::string check_id;
  std::string check_h;
  std::string check_k;
  check->add_option("identity", check_id)->required();
  check->add_option("h", check_h)->required();
  check->add_option("k", check_k)->required();
  check->add_option("--format", format_name, "human | json | csv");

  auto* scan_cmd = app.add_subcommand("scan", "Scan identities over 1 <= h <= hmax, 1 <= k <= kmax");
  std::string ids = "all";
  std::int64_t h_max = 0;
  std::int64_t k_max = 0;
  unsigned jobs = 1;
  bool no_timing = false;
  scan_cmd->add_option("--ids", ids, "Comma list of ids, or all | all-laws | all-conjectures");
  scan_cmd->add_option("--hmax", h_max)->required()->check(CLI::PositiveNumber);
  scan_cmd->add_option("--kmax", k_max)->required()->check(CLI::PositiveNumber);
  scan_cmd->add_option("--format", format_name, "human | json | csv");
  scan_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  scan_cmd->add_flag("--no-timing", no_timing, "Write elapsed_ms as 0 for reproducible output");

  auto* series = app.add_subcommand("series", "Compare a trigonometric representation with the exact sum");
  std::string kind_name;
  std::string series_h;
  std::string series_k;
  std::int64_t periods = 2000;
  std::vector<std::int64_t> depths;
  series->add_option("kind", kind_name, "FIN_S .. FIN_S5, INF_S .. INF_S5, {FIN,INF}_B1_{SUMODD,BOTHODD}")
      ->required();
  series->add_option("h", series_h)->required();
  series->add_option("k", series_k)->required();
  series->add_option("--periods", periods, "Whole periods summed for infinite kinds");
  series->add_option("--depths", depths, "Convergence table over several period counts")->delimiter(',');
  series->add_option("--format", format_name, "human | json | csv");

  auto* fib_cmd = app.add_subcommand("fib", "Fibonacci numbers and pairs");
  std::string fib_sub;
  std::int64_t fib_n = 0;
  fib_cmd->add_option("what", fib_sub, "value | pair-sym | pair-kuch")->required();
  fib_cmd->add_option("n", fib_n)->required();

  auto* list = app.add_subcommand("list", "List registered identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) {
      std::cout << compute_sum(sum_name, parse_ints(sum_args)).str() << '\n';
      return kExitPass;
    }
    if (*check) {
      const OutputFormat format = resolve_format(format_name);
      const CheckReport report = check_identity(check_id, parse_int(check_h), parse_int(check_k));
      std::cout << render_checks({&report, 1}, format);
      return report.pass ? kExitPass : kExitFail;
    }
    if (*scan_cmd) {
      const OutputFormat format = resolve_format(format_name);
      const std::vector<std::string> selected = expand_selector(ids);
      const std::vector<ScanReport> reports = scan(selected, h_max, k_max, jobs);
      std::cout << render_scans(reports, format, !no_timing);
      for (const ScanReport& r : reports) {
        if (r.mode == IdentityMode::Law && !r.passed()) return kExitFail;
      }
      return kExitPass;
    }
    if (*series) {
      const OutputFormat format = resolve_format(format_name);
      const auto kind = parse_series_kind(kind_name);
      if (!kind) throw UsageError("unknown series kind '" + kind_name + "'");
      const Int h = parse_int(series_h);
      const Int k = parse_int(series_k);
      std::vector<SeriesResult> results;
      if (!depths.empty()) {
        if (!is_infinite(*kind)) throw UsageError("--depths needs an infinite series kind");
        results = convergence_table(*kind, h, k, depths);
      } else {
        results.push_back(evaluate_series(*kind, h, k, periods));
      }
      std::cout << render_series(results, format);
      return kExitPass;
    }
    if (*fib_cmd) {
      if (fib_sub == "value") {
        std::cout << fib(fib_n).get_str() << '\n';
      } else if (fib_sub == "pair-sym") {
        const auto [h, k] = symmetric_pair(fib_n);
        std::cout << h.get_str() << ' ' << k.get_str() << '\n';
      } else if (fib_sub == "pair-kuch") {
        const auto [h, k] = kuch_pair(fib_n);
        std::cout << h.get_str() << ' ' << k.get_str() << '\n';
      } else {
        throw UsageError("unknown fib subcommand '" + fib_sub + "'");
      }
      return kExitPass;
    }
    if (*list) {
      for (const Identity& identity : registry()) {
        std::cout << identity.id << " [" << to_string(identity.mode) << "] " << identity.statement << "  when "
                  << identity.hypothesis << '\n';
      }
      return kExitPass;
    }
  } catch (const PoleError& e) {
    std::cerr << "finsum: " << e.what() << '\n';
    return kExitPole;
  } catch (const std::exception& e) {
    // Domain, precondition, applicability and parse errors are all usage.
    std::cerr << "finsum: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
