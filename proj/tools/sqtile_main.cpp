#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "sqtile/formulas.hpp"
#include "sqtile/origami.hpp"
#include "sqtile/report.hpp"
#include "sqtile/verify.hpp"

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("sqtile");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("LOG_LEVEL")) {
    const std::string v = env;
    if (v == "error") spdlog::set_level(spdlog::level::err);
    else if (v == "warn") spdlog::set_level(spdlog::level::warn);
    else if (v == "info") spdlog::set_level(spdlog::level::info);
    else if (v == "debug") spdlog::set_level(spdlog::level::debug);
    else spdlog::warn("ignoring LOG_LEVEL={} (expected error, warn, info or debug)", v);
  }
}

// Writes to --out when given, otherwise to stdout. Files are opened in binary
// mode so line endings stay LF.
void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot open output file " + out_path);
  f << text;
}

struct Common {
  sqtile::i64 n_min = 4, n_max = 101;
  std::string format = "csv";
  std::string out;
  std::string coefficient = "corrected";
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
};

sqtile::ConvCoefficient coefficient_of(const Common& c) {
  auto k = sqtile::parse_coefficient(c.coefficient);
  if (!k) throw UsageError("unknown --conv-coefficient " + c.coefficient);
  return *k;
}

std::vector<sqtile::CensusRow> census_rows(const Common& c) {
  if (c.n_min < 4) throw UsageError("--n-min must be at least 4");
  if (c.n_max < c.n_min) throw UsageError("--n-max must not be below --n-min");
  if (c.n_max > sqtile::i64(sqtile::kAdditiveCap))
    throw UsageError("--n-max above the additive-convolution cap of " + std::to_string(sqtile::kAdditiveCap));
  const auto coef = coefficient_of(c);
  spdlog::info("building tables to n = {} ({} coefficient)", c.n_max, sqtile::coefficient_name(coef));
  const sqtile::FormulaTables t(static_cast<std::size_t>(c.n_max));
  std::vector<sqtile::CensusRow> rows;
  for (auto n = c.n_min; n <= c.n_max; ++n) rows.push_back(t.row(sqtile::u64(n), coef));
  return rows;
}

int cmd_table(const Common& c) {
  const auto rows = census_rows(c);
  std::ostringstream os;
  if (c.format == "csv")
    sqtile::write_table_csv(os, rows);
  else
    sqtile::write_table_jsonl(os, rows);
  emit(c.out, os.str());
  return kOk;
}

int cmd_densities(const Common& c) {
  const auto rows = census_rows(c);
  std::ostringstream os;
  if (c.format == "csv")
    sqtile::write_densities_csv(os, rows);
  else
    sqtile::write_densities_jsonl(os, rows);
  emit(c.out, os.str());
  return kOk;
}

int cmd_verify(const Common& c, const std::string& suite, bool n_min_set, bool n_max_set, bool allow_n8,
               bool inject_fault) {
  sqtile::VerifyOptions opt;
  if (n_min_set) opt.n_min = c.n_min;
  if (n_max_set) opt.n_max = c.n_max;
  opt.workers = c.workers;
  opt.coefficient = coefficient_of(c);
  opt.allow_n8 = allow_n8;
  opt.inject_fault = inject_fault;

  std::vector<std::string> names;
  if (suite == "all")
    names = sqtile::suite_names();
  else
    names.push_back(suite);
  for (const auto& s : names)
    if (std::find(sqtile::suite_names().begin(), sqtile::suite_names().end(), s) == sqtile::suite_names().end())
      throw UsageError("unknown suite " + s);

  std::ostringstream os;
  bool all_ok = true;
  for (const auto& s : names) {
    spdlog::info("running suite {}", s);
    std::optional<sqtile::SuiteResult> r;
    try {
      r = sqtile::run_suite(s, opt);
    } catch (const std::invalid_argument& e) {
      throw UsageError(s + ": " + e.what());
    }
    all_ok = all_ok && r->passed();
    os << "suite " << r->suite << ": checks=" << r->checks << " failed=" << r->failures << ' '
       << (r->passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& n : r->notes) os << "  note: " << n << '\n';
    for (const auto& f : r->failed) os << "  fail: " << f << '\n';
  }
  emit(c.out, os.str());
  return all_ok ? kOk : kFailed;
}

int cmd_bruteforce(const Common& c, int n, bool allow_n8) {
  if (n < sqtile::kBruteMinN || n > sqtile::kBruteMaxN) throw UsageError("--n must lie in 4..8");
  if (n == 8 && !allow_n8) throw UsageError("n = 8 scans 1.6e9 pairs; pass --allow-n8 to run it");
  const auto res = sqtile::brute_force_census(n, c.workers, [](double f) {
    spdlog::info("sweep {:.0f}% done", 100.0 * f);
  });
  emit(c.out, sqtile::bruteforce_json(res).dump() + "\n");
  return kOk;
}

void add_common(CLI::App* sub, Common& c, bool census) {
  sub->add_option("--n-min", c.n_min, "smallest n");
  sub->add_option("--n-max", c.n_max, "largest n");
  sub->add_option("--out", c.out, "write output here instead of stdout");
  sub->add_option("--conv-coefficient", c.coefficient,
                  "coefficient of the convolution term in B and D: corrected (default) or printed")
      ->check(CLI::IsMember({"corrected", "printed", "sigma2-inverse", "mu-sigma2"}));
  if (census) sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Exact census of primitive square-tiled surfaces in genus two"};
  app.require_subcommand(1);

  Common c;
  std::string suite;
  int n = 0;
  bool allow_n8 = false, inject_fault = false;

  auto* table = app.add_subcommand("table", "counts A..E per n");
  add_common(table, c, true);
  auto* dens = app.add_subcommand("densities", "ratios A/E..D/E per n, 12 decimals");
  add_common(dens, c, true);
  auto* verify = app.add_subcommand("verify", "run a verification suite (or 'all')");
  add_common(verify, c, false);
  verify->add_option("--suite", suite, "suite id")->required();
  verify->add_flag("--allow-n8", allow_n8, "permit the n = 8 permutation sweep");
  verify->add_flag("--inject-fault", inject_fault)->group("");
  auto* brute = app.add_subcommand("bruteforce", "sweep S_n x S_n for one n");
  brute->add_option("--n", n, "number of squares (4..8)")->required();
  brute->add_option("--out", c.out, "write output here instead of stdout");
  brute->add_option("--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
  brute->add_flag("--allow-n8", allow_n8, "permit n = 8");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*table) return cmd_table(c);
    if (*dens) return cmd_densities(c);
    if (*verify)
      return cmd_verify(c, suite, verify->count("--n-min") > 0, verify->count("--n-max") > 0, allow_n8,
                        inject_fault);
    if (*brute) return cmd_bruteforce(c, n, allow_n8);
  } catch (const UsageError& e) {
    spdlog::error("{}", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    spdlog::error("internal error: {}", e.what());
    return kFailed;
  }
  return kUsage;
}
