// qtr: command-line front end: steady-state, verify, figure, table1, sweep.
//
// Exit codes: 0 success, 1 invalid input or runtime error, 2 a verification check failed.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qtr/errors.hpp"
#include "qtr/harness/commands.hpp"
#include "qtr/harness/config.hpp"
#include "qtr/harness/output.hpp"
#include "qtr/harness/verify.hpp"

namespace {

using namespace qtr;
using namespace qtr::harness;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitVerifyFailed = 2;

// Config file path, found before CLI11 runs so the file can seed the defaults.
std::optional<std::string> prescan_config(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) return std::string(argv[i + 1]);
    if (a.rfind("--config=", 0) == 0) return a.substr(9);
  }
  return std::nullopt;
}

bool parse_bool(const std::string& field, const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw ValidationError(field, "expected true or false, got '" + v + "'");
}

struct Settings {
  std::map<std::string, double> params;  // model parameters by name
  std::optional<double> nc;
  std::optional<double> nh;
  std::string format{"csv"};
  std::string out;
  // verify
  std::vector<std::string> suites{"all"};
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::size_t draws{1000};
  // figure
  int figure_id{0};
  FigureGrid grid;
  // sweep
  std::string regime{"full"};
  std::string objective{"omega"};
  std::string param;
  double lo{0.0};
  double hi{0.0};
  std::size_t points{25};
  bool log{false};
  std::string optimize;
};

void apply_config(const std::map<std::string, std::string>& kv, Settings& s) {
  for (const auto& [key, value] : kv) {
    if (ParameterSet::is_known(key)) s.params[key] = parse_number(key, value);
    else if (key == "nc") s.nc = parse_number(key, value);
    else if (key == "nh") s.nh = parse_number(key, value);
    else if (key == "format") s.format = value;
    else if (key == "out") s.out = value;
    else if (key == "seed") s.seed = static_cast<std::uint64_t>(parse_number(key, value));
    else if (key == "tol") s.tol = parse_number(key, value);
    else if (key == "draws") s.draws = static_cast<std::size_t>(parse_number(key, value));
    else if (key == "suite") s.suites = {value};
    else if (key == "regime") s.regime = value;
    else if (key == "objective") s.objective = value;
    else if (key == "param") s.param = value;
    else if (key == "lo") s.lo = parse_number(key, value);
    else if (key == "hi") s.hi = parse_number(key, value);
    else if (key == "points") s.points = static_cast<std::size_t>(parse_number(key, value));
    else if (key == "log") s.log = parse_bool(key, value);
    else if (key == "optimize") s.optimize = value;
    else throw ValidationError("config", "unknown key '" + key + "'");
  }
}

ParameterSet build_parameters(const Settings& s) {
  ParameterSet p;
  for (const std::string& name : ParameterSet::names()) {
    if (auto it = s.params.find(name); it != s.params.end()) p.set(name, it->second);
  }
  return p;
}

void add_parameter_flags(CLI::App* cmd, std::map<std::string, double>& cli_params) {
  for (const std::string& name : ParameterSet::names()) {
    cmd->add_option_function<double>(
        "--" + name, [&cli_params, name](double v) { cli_params[name] = v; }, "model parameter " + name);
  }
}

void render(const Table& table, const Settings& s) {
  const OutputFormat format = parse_format(s.format);
  if (s.out.empty()) {
    write_table(std::cout, table, format);
    std::cout.flush();
    return;
  }
  std::ofstream file(s.out, std::ios::binary);
  if (!file) throw ValidationError("out", "cannot open '" + s.out + "' for writing");
  write_table(file, table, format);
  if (!file) throw ValidationError("out", "write to '" + s.out + "' failed");
}

int run_verify(const Settings& s) {
  std::vector<std::string> suites;
  for (const auto& name : s.suites) {
    if (name == "all") {
      suites.insert(suites.end(), suite_names().begin(), suite_names().end());
    } else {
      suites.push_back(name);
    }
  }
  VerifyOptions opt;
  opt.seed = resolve_seed(s.seed);
  opt.tol = s.tol;
  opt.draws = s.draws;
  std::vector<VerificationReport> reports;
  bool ok = true;
  for (const auto& name : suites) {
    reports.push_back(run_suite(name, opt));
    const auto& r = reports.back();
    ok = ok && r.passed();
    std::size_t failed = 0;
    for (const auto& c : r.checks) failed += c.pass ? 0 : 1;
    std::cerr << "suite " << r.suite << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.checks.size()
              << " checks, " << failed << " failed)\n";
  }
  render(report_table(reports), s);
  return ok ? kExitOk : kExitVerifyFailed;
}

std::string flag_name(const std::string& field) { return field == "QTR_SEED" ? field : "--" + field; }

}  // namespace

int main(int argc, char** argv) {
  Settings s;
  std::map<std::string, double> cli_params;

  CLI::App app{"Three-level quantum refrigerator: steady state, optima, bounds and figure data"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  app.add_option("--config", config_path, "key = value file; flags override its values");
  app.add_option("--format", s.format, "output format: csv or json");
  app.add_option("--out", s.out, "write output to this file instead of stdout");

  auto* steady = app.add_subcommand("steady-state", "steady state, fluxes and figures of merit");
  add_parameter_flags(steady, cli_params);
  std::optional<double> cli_nc;
  std::optional<double> cli_nh;
  steady->add_option_function<double>("--nc", [&](double v) { cli_nc = v; }, "override the cold occupation");
  steady->add_option_function<double>("--nh", [&](double v) { cli_nh = v; }, "override the hot occupation");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> cli_suites;
  verify->add_option("--suite", cli_suites,
                     "oracle, low_t, bounds_strong, bounds_weak, series, cp_ratios, chi_compare or all");
  verify->add_option_function<std::uint64_t>("--seed", [&](std::uint64_t v) { s.seed = v; },
                                             "random seed (default: QTR_SEED, then built-in)");
  verify->add_option_function<double>("--tol", [&](double v) { s.tol = v; }, "replace each suite's headline tolerance");
  verify->add_option("--draws", s.draws, "oracle suite: number of random draws");

  auto* figure = app.add_subcommand("figure", "figure source data over a zeta_C grid");
  figure->add_option("--id", s.figure_id, "figure: 2, 3 or 4")->required();
  figure->add_option("--lo", s.grid.lo, "smallest zeta_C");
  figure->add_option("--hi", s.grid.hi, "largest zeta_C");
  figure->add_option("--points", s.grid.points, "grid points");
  figure->add_flag("--log", s.grid.log, "logarithmic grid");

  auto* table = app.add_subcommand("table1", "series expansion comparison table");

  auto* sweep = app.add_subcommand("sweep", "evaluate an objective over a parameter grid");
  add_parameter_flags(sweep, cli_params);
  sweep->add_option("--regime", s.regime, "full, low_t, high_t_strong, high_t_weak, high_t_weak_gamma_inf, high_t_weak_gamma_0");
  sweep->add_option("--objective", s.objective, "omega, chi, cooling_power or bounds");
  sweep->add_option("--param", s.param, "swept parameter");
  sweep->add_option("--lo", s.lo, "grid start");
  sweep->add_option("--hi", s.hi, "grid end");
  sweep->add_option("--points", s.points, "grid points");
  sweep->add_flag("--log", s.log, "logarithmic grid");
  sweep->add_option("--optimize", s.optimize, "maximize over wc or wh at each grid point");

  try {
    if (const auto path = prescan_config(argc, argv)) apply_config(load_key_value_file(*path), s);
    app.parse(argc, argv);
    for (const auto& [k, v] : cli_params) s.params[k] = v;
    if (cli_nc) s.nc = cli_nc;
    if (cli_nh) s.nh = cli_nh;
    if (!cli_suites.empty()) s.suites = cli_suites;
    parse_format(s.format);

    if (*steady) {
      render(steady_state_table(build_parameters(s), s.nc, s.nh), s);
    } else if (*verify) {
      return run_verify(s);
    } else if (*figure) {
      render(figure_table(s.figure_id, s.grid), s);
    } else if (*table) {
      render(table1(), s);
    } else if (*sweep) {
      SweepConfig cfg;
      cfg.regime = parse_regime(s.regime);
      cfg.objective = parse_objective(s.objective);
      cfg.format = parse_format(s.format);
      if (s.param.empty()) throw ValidationError("param", "a swept parameter is required");
      cfg.swept = {s.param, s.lo, s.hi, s.points, s.log};
      if (!s.optimize.empty()) cfg.optimize = s.optimize;
      cfg.fixed = s.params;
      render(sweep_table(cfg, ParameterSet{}), s);
    }
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  } catch (const ValidationError& e) {
    // what() is "field: message"
    const std::string what = e.what();
    const std::string message = what.substr(std::min(what.size(), e.field().size() + 2));
    std::cerr << "error: " << flag_name(e.field()) << ": " << message << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}
