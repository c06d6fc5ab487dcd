#include "qtr/harness/commands.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qtr/analytic.hpp"
#include "qtr/errors.hpp"
#include "qtr/optimize.hpp"
#include "qtr/parallel.hpp"
#include "qtr/regimes.hpp"
#include "qtr/thermodynamics.hpp"

namespace qtr::harness {
namespace {

constexpr double kSeriesTol = 1e-4;
constexpr double kInnerRelTol = 1e-12;

std::vector<double> figure_grid(const FigureGrid& g) {
  if (!(g.lo > 0.0) || !(g.lo < g.hi) || !std::isfinite(g.hi)) {
    throw ValidationError("grid", "need 0 < lo < hi");
  }
  if (g.points < 2) throw ValidationError("points", "need at least 2 grid points");
  SweptParameter p{"zeta_c", g.lo, g.hi, g.points, g.log};
  return p.grid();
}

// "verified" when the fitted series reproduces the stored coefficients.
std::string verified(std::string_view name) {
  const SeriesCoefficients ref = series_reference(name);
  const SeriesFit fit =
      fit_asymptotic_series(series_function(name), kDefaultSeriesSamples, kDefaultSeriesHeldOut, ref.basis);
  const bool ok = std::abs(fit.a - ref.a) <= kSeriesTol && std::abs(fit.b - ref.b) <= kSeriesTol &&
                  std::abs(fit.c - ref.c) <= kSeriesTol;
  return ok ? "verified" : "MISMATCH";
}

double evaluate_objective(Objective objective, Regime regime, const BathSpec& bath, const DriveSpec& d) {
  switch (objective) {
    case Objective::Omega: return regime_omega(regime, bath, d);
    case Objective::Chi: return regime_chi(regime, bath, d);
    case Objective::CoolingPower: return regime_cooling_power(regime, bath, d);
    case Objective::Bounds: break;
  }
  throw ValidationError("objective", "not a pointwise objective");
}

Table bounds_sweep(const std::vector<double>& zetas) {
  Table t;
  t.columns = {"zeta_C",   "zeta_minusminus", "zeta_minus", "zeta_YC",     "zeta_plus",
               "zeta_plusplus", "zeta_CA",    "chi_plus",   "chi_plusplus"};
  for (double z : zetas) {
    const auto b = bound_functions(z);
    const auto c = chi_cop_functions(z);
    t.add_row({z, b.zeta_mm, b.zeta_m, b.zeta_yc, b.zeta_p, b.zeta_pp, c.zeta_ca, c.chi_plus, c.chi_plus_plus});
  }
  return t;
}

}  // namespace

Table steady_state_table(const ParameterSet& params, std::optional<double> nc, std::optional<double> nh) {
  const BathSpec bath = params.bath();
  const DriveSpec drive = params.drive();
  Occupations occ = Occupations::thermal(bath, drive);
  occ = Occupations::make(nc.value_or(occ.nc), nh.value_or(occ.nh));
  const SteadyState ss = steady_state(occ, Couplings::from(bath, drive));
  const Metrics m = evaluate_metrics(ss, drive, bath.carnot_cop());

  Table t;
  t.columns = {"nc",    "nh",            "pg",       "p0",  "p1",         "rho10_re", "rho10_im",
               "power", "cooling_power", "hot_flux", "cop", "carnot_cop", "omega",    "chi"};
  t.add_row({occ.nc, occ.nh, ss.pg, ss.p0, ss.p1, ss.rho10.real(), ss.rho10.imag(), m.power,
             m.cooling_power, m.hot_flux, m.cop, bath.carnot_cop(), m.omega, m.chi});
  return t;
}

Table figure_table(int id, const FigureGrid& grid) {
  if (id < 2 || id > 4) throw ValidationError("id", "figure id must be 2, 3 or 4");
  const std::vector<double> zs = figure_grid(grid);
  Table t;
  switch (id) {
    case 2: t.columns = {"zeta_C", "zeta_minus", "zeta_YC", "zeta_plus", "zeta_CA", "chi_plus"}; break;
    case 3: t.columns = {"zeta_C", "R_inf", "R_zero"}; break;
    default: t.columns = {"zeta_C", "cp_mof_gamma_inf_scaled", "cp_mof_gamma_zero_scaled"}; break;
  }
  const auto rows = par::map(zs.size(), [&](std::size_t i) -> std::vector<Cell> {
    const double z = zs[i];
    switch (id) {
      case 2: {
        const auto c = chi_cop_functions(z);
        return {z, zeta_minus(z), zeta_yc(z), zeta_plus(z), c.zeta_ca, c.chi_plus};
      }
      case 3: {
        const auto r = cp_ratios(z);
        return {z, r.gamma_inf, r.gamma_zero};
      }
      default: {
        const auto cp = cp_at_mof(z);
        return {z, cp.gamma_inf, cp.gamma_zero};
      }
    }
  });
  for (const auto& r : rows) t.add_row(r);
  return t;
}

InteriorMaximum interior_maximum(const Table& table, const std::string& x, const std::string& y) {
  const std::size_t n = table.rows.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double prev = table.number(i - 1, y);
    const double cur = table.number(i, y);
    const double next = table.number(i + 1, y);
    if (cur > prev && cur >= next) return {true, table.number(i, x), cur};
  }
  return {};
}

Table table1() {
  const std::string not_computed = "not computed (companion engine result)";
  struct Row {
    const char* label;
    const char* omega_series;  // series name or nullptr
    const char* efficiency;    // quoted
    const char* chi_series;    // series name, "0" or nullptr
  };
  const std::vector<Row> rows = {
      {"zeta_--", "minusminus", "3/4·ηC − 1/32·ηC² − 3/128·ηC³", "0"},
      {"zeta_-", "minus", "3/4·ηC", "0"},
      {"zeta_YC", "YC", "3/4·ηC + 1/32·ηC² + 3/128·ηC³", "CA_chi"},
      {"zeta_+", "plus", "3/4·ηC + 2/32·ηC² + 3/64·ηC³", "plus_chi"},
      {"zeta_++", "plusplus", "3/4·ηC + 3/32·ηC² + 9/128·ηC³", "plusplus_chi"},
      {"zeta_SSD", "SSD", nullptr, nullptr},
      {"zeta_MNI", "MNI", nullptr, nullptr},
  };

  Table t;
  t.columns = {"row", "column_I", "status_I", "column_II", "status_II", "column_III", "status_III"};
  for (const Row& r : rows) {
    std::vector<Cell> cells{std::string(r.label)};
    cells.emplace_back(series_reference(r.omega_series).expression);
    cells.emplace_back(verified(r.omega_series));
    cells.emplace_back(std::string(r.efficiency ? r.efficiency : ""));
    cells.emplace_back(std::string(r.efficiency ? not_computed : ""));
    if (r.chi_series == nullptr) {
      cells.emplace_back(std::string());
      cells.emplace_back(std::string());
    } else if (std::string_view(r.chi_series) == "0") {
      cells.emplace_back(std::string("0"));
      cells.emplace_back(std::string("verified (trivial)"));
    } else {
      cells.emplace_back(series_reference(r.chi_series).expression);
      cells.emplace_back(verified(r.chi_series));
    }
    t.add_row(std::move(cells));
  }
  return t;
}

Table sweep_table(const SweepConfig& cfg, const ParameterSet& base) {
  cfg.validate();
  const std::vector<double> xs = cfg.swept.grid();
  if (cfg.objective == Objective::Bounds) return bounds_sweep(xs);

  // Primary parameters first so derived handles (gamma, tau, zeta_c) see them.
  ParameterSet fixed = base;
  for (const std::string& name : ParameterSet::names()) {
    if (auto it = cfg.fixed.find(name); it != cfg.fixed.end()) fixed.set(name, it->second);
  }

  Table t;
  t.columns.push_back(cfg.swept.name);
  if (cfg.optimize) t.columns.push_back(*cfg.optimize + "_opt");
  t.columns.emplace_back(to_string(cfg.objective));
  t.columns.emplace_back("cop");

  const auto rows = par::map(xs.size(), [&](std::size_t i) -> std::vector<Cell> {
    ParameterSet p = fixed;
    p.set(cfg.swept.name, xs[i]);
    const BathSpec bath = p.bath();
    auto value = [&](double wc, double wh) {
      return evaluate_objective(cfg.objective, cfg.regime, bath, DriveSpec::make(wc, wh, p.lambda));
    };
    if (!cfg.optimize) {
      const DriveSpec d = p.drive();
      return {xs[i], value(d.wc, d.wh), cop(d)};
    }
    if (*cfg.optimize == "wc") {
      const double lo = 1e-9 * p.wh;
      const double hi = p.wh * (1.0 - 1e-9);
      const auto r = maximize_scalar([&](double wc) { return value(wc, p.wh); }, lo, hi, kInnerRelTol * (hi - lo));
      const double wc = r.argmax[0];
      return {xs[i], wc, r.value, wc / (p.wh - wc)};
    }
    const double lo = p.wc * (1.0 + 1e-9);
    const double hi = p.wc * (1.0 + 4.0 / bath.carnot_cop());
    const auto r = maximize_scalar([&](double wh) { return value(p.wc, wh); }, lo, hi, kInnerRelTol * (hi - lo));
    const double wh = r.argmax[0];
    return {xs[i], wh, r.value, p.wc / (wh - p.wc)};
  });
  for (const auto& r : rows) t.add_row(r);
  return t;
}

}  // namespace qtr::harness
