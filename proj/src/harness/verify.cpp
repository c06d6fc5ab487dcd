#include "qtr/harness/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <sstream>

#include "qtr/analytic.hpp"
#include "qtr/errors.hpp"
#include "qtr/harness/commands.hpp"
#include "qtr/harness/oracle_batch.hpp"
#include "qtr/optimize.hpp"
#include "qtr/parallel.hpp"
#include "qtr/regimes.hpp"
#include "qtr/thermodynamics.hpp"

namespace qtr::harness {
namespace {

constexpr double kOracleTol = 1e-9;
constexpr double kOptimizerTol = 1e-6;
constexpr double kSeriesTol = 1e-4;
constexpr double kMachineTol = 1e-12;
// Inner searches refine the frequency to this fraction of the search interval.
constexpr double kInnerRelTol = 1e-12;

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

class Suite {
 public:
  Suite(std::string name, const VerifyOptions& options) : options_(options) { report_.suite = std::move(name); }

  double headline(double fallback) const { return options_.tol.value_or(fallback); }
  const VerifyOptions& options() const { return options_; }

  // |measured - expected| <= tol
  void near(std::string id, std::string what, double measured, double expected, double tol,
            int criterion = 0) {
    const bool ok = std::abs(measured - expected) <= tol;
    add({std::move(id), std::move(what), measured, expected, tol, ok, criterion});
  }

  // measured <= tol, for error magnitudes
  void small(std::string id, std::string what, double measured, double tol, int criterion = 0) {
    add({std::move(id), std::move(what), measured, 0.0, tol, measured <= tol, criterion});
  }

  void holds(std::string id, std::string what, double measured, bool ok, int criterion = 0) {
    add({std::move(id), std::move(what), measured, measured, 0.0, ok, criterion});
  }

  VerificationReport take() { return std::move(report_); }

 private:
  void add(Check c) {
    if (!std::isfinite(c.measured)) c.pass = false;
    report_.checks.push_back(std::move(c));
  }

  VerificationReport report_;
  VerifyOptions options_;
};

BathSpec bath_from_zeta(double zeta_c, double gamma = 1.0) {
  const double tc = 1.0;
  return BathSpec::make(tc, tc * (1.0 + zeta_c) / zeta_c, 1.0, gamma);
}

BathSpec bath_from_tau(double tau, double gamma) { return BathSpec::make(tau, 1.0, 1.0, gamma); }

// Best COP when the cold frequency is optimized at wh = 1.
struct InnerOptimum {
  double x{0.0};
  double cop{0.0};
};

InnerOptimum optimize_wc(const std::function<double(double, double)>& objective) {
  const double wh = 1.0;
  const double lo = 1e-9 * wh;
  const double hi = wh * (1.0 - 1e-9);
  const auto r = maximize_scalar([&](double wc) { return objective(wc, wh); }, lo, hi,
                                 kInnerRelTol * (hi - lo));
  const double wc = r.argmax[0];
  return {wc, wc / (wh - wc)};
}

// Best COP when the hot frequency is optimized at wc = 1 over (wc, wc (1 + span)).
InnerOptimum optimize_wh(const std::function<double(double, double)>& objective, double span) {
  const double wc = 1.0;
  const double lo = wc * (1.0 + 1e-9);
  const double hi = wc * (1.0 + span);
  const auto r = maximize_scalar([&](double wh) { return objective(wc, wh); }, lo, hi,
                                 kInnerRelTol * (hi - lo));
  const double wh = r.argmax[0];
  return {wh, wc / (wh - wc)};
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(n - 1));
  }
  return g;
}

// ---------------------------------------------------------------------------

VerificationReport suite_oracle(const VerifyOptions& opt) {
  Suite s("oracle", opt);
  const double tol = s.headline(kOracleTol);

  const auto draws = draw_oracle_parameters(opt.seed, opt.draws);
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = run_oracle_batch(draws);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto w = summarize(results).worst;
  const std::string n = std::to_string(opt.draws) + " seeded draws";

  s.small("oracle.coherence", "closed-form rho10 vs null-space oracle, max rel err over " + n,
          w.rho10_rel_err, tol, 1);
  s.small("oracle.populations", "linear-solve populations vs null-space oracle, max rel err",
          w.population_rel_err, tol, 1);
  s.small("oracle.closed_vs_linear", "closed-form rho10 vs linear solve, max rel err",
          w.closed_vs_linear_rel_err, kMachineTol, 1);
  s.small("oracle.runtime", "wall time of the oracle batch [s]", seconds, 5.0, 1);
  s.small("oracle.first_law", "|Qh - Qc - P| / Qh with Qh from -Tr(L_h[rho] H0)",
          w.first_law_rel_err, kMachineTol, 2);
  s.small("oracle.trace", "|Tr L[sigma]| relative to the largest entry of L[sigma]", w.trace_defect,
          kMachineTol);
  s.small("oracle.g_coherence", "largest g-coherence of the oracle state", w.g_coherence, kMachineTol);
  s.small("oracle.re_rho10", "largest |Re rho10| of the oracle state", w.re_rho10, kMachineTol);
  s.small("oracle.hermitian", "largest |rho - rho^dagger| of the oracle state", w.hermiticity_defect,
          kMachineTol);

  const Occupations occ{1.0, 0.5};
  const Couplings unit{1.0, 1.0, 1.0};
  s.near("oracle.example_closed", "Im rho10 at nc=1, nh=0.5, unit rates (closed form)",
         coherence_closed_form(occ, unit).imag(), -0.0194175, 1e-7);
  s.near("oracle.example_linear", "Im rho10 at nc=1, nh=0.5, unit rates (linear solve)",
         steady_state(occ, unit).rho10.imag(), -0.0194175, 1e-7);
  return s.take();
}

VerificationReport suite_low_t(const VerifyOptions& opt) {
  Suite s("low_t", opt);
  const double tol = s.headline(kOptimizerTol);
  for (double zc : {0.2, 1.0, 5.0}) {
    const BathSpec bath = bath_from_zeta(zc);
    const LowTOptimum ref = low_t_optimal_frequencies(zc, bath.tc);
    Box box;
    box.lo = {1e-3, 1e-3};
    box.hi = {10.0 * bath.tc, 40.0 * bath.tc};
    const auto r = maximize_box(
        [&](double wc, double wh) { return omega_low_temperature(wc, wh, bath, 1.0); }, box, 1e-10);
    const double wc = r.argmax[0];
    const double wh = r.argmax[1];
    const std::string tag = "zeta_C=" + fmt(zc);
    s.near("low_t.wc." + fmt(zc), "2-D optimum wc* at " + tag, wc, ref.wc, 1e-5, 3);
    s.near("low_t.wh." + fmt(zc), "2-D optimum wh* at " + tag, wh, ref.wh, 1e-5, 3);
    s.near("low_t.cop." + fmt(zc), "COP at the numerical optimum vs closed form at " + tag,
           wc / (wh - wc), ref.cop, tol, 3);
    s.near("low_t.log_ratio." + fmt(zc), "wc*/Tc - wh*/Th equals k at " + tag,
           ref.wc / bath.tc - ref.wh / bath.th, low_t_log_ratio(zc), kMachineTol);
  }
  // References below are 30-digit evaluations of the closed forms.
  s.near("low_t.zeta_ssd", "closed-form COP at zeta_C = 1", cop_ssd_low_t(1.0), 0.6907042777010376, 1e-6, 3);
  const LowTOptimum one = low_t_optimal_frequencies(1.0, 1.0);
  s.near("low_t.wc_example", "wc* at zeta_C = 1, Tc = 1", one.wc, 1.8109302162163288, 1e-6, 3);
  s.near("low_t.wh_example", "wh* at zeta_C = 1, Tc = 1", one.wh, 4.4327906486489863, 1e-6, 3);
  return s.take();
}

struct WindowScan {
  std::vector<double> gammas;
  std::vector<double> cops;
};

void window_checks(Suite& s, const std::string& prefix, const std::string& what, const WindowScan& scan,
                   const std::function<double(double)>& lower, const std::function<double(double)>& upper,
                   double zc, bool upper_at_small_gamma, int criterion) {
  const double lo = lower(zc);
  const double hi = upper(zc);
  double violation = 0.0;
  double rise = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < scan.cops.size(); ++i) {
    violation = std::max({violation, lo - scan.cops[i], scan.cops[i] - hi});
    if (i > 0) rise = std::max(rise, scan.cops[i] - scan.cops[i - 1]);
  }
  const std::string tag = " (" + what + ", zeta_C=" + fmt(zc) + ")";
  s.small(prefix + ".window", "largest excursion outside the bound window" + tag, violation, 1e-9,
          criterion);
  s.small(prefix + ".monotone", "largest COP increase between successive gamma" + tag, std::max(rise, 0.0),
          1e-9, criterion);
  const double first = scan.cops.front();
  const double last = scan.cops.back();
  s.near(prefix + ".gamma_small", "COP at gamma = " + fmt(scan.gammas.front()) + tag, first,
         upper_at_small_gamma ? hi : lo, 1e-3, criterion);
  s.near(prefix + ".gamma_large", "COP at gamma = " + fmt(scan.gammas.back()) + tag, last,
         upper_at_small_gamma ? lo : hi, 1e-3, criterion);
}

VerificationReport suite_bounds_strong(const VerifyOptions& opt) {
  Suite s("bounds_strong", opt);
  const double tol = s.headline(kOptimizerTol);
  const auto gammas = log_grid(1e-6, 1e6, 25);

  for (double tau : {0.2, 0.5, 0.8}) {
    const double zc = carnot_cop_from_tau(tau);
    const std::string t = fmt(tau);

    // Optimizing wc at fixed wh.
    WindowScan scan_c{gammas, {}};
    scan_c.cops = par::map(gammas.size(), [&](std::size_t i) {
      const BathSpec bath = bath_from_tau(tau, gammas[i]);
      return optimize_wc([&](double wc, double wh) { return omega_high_t_strong(wc, wh, bath); }).cop;
    });
    window_checks(s, "strong_wc.tau=" + t, "optimize wc", scan_c, zeta_yc, zeta_plus, zc, true, 4);
    double worst = 0.0;
    for (std::size_t i = 0; i < gammas.size(); ++i) {
      worst = std::max(worst, std::abs(scan_c.cops[i] - cop_mof_strong(tau, gammas[i])));
    }
    s.small("strong_wc.tau=" + t + ".closed_form",
            "numerical COP vs closed-form optimum over the gamma grid, tau=" + t, worst, tol);

    // Optimizing wh at fixed wc.
    WindowScan scan_h{gammas, {}};
    scan_h.cops = par::map(gammas.size(), [&](std::size_t i) {
      const BathSpec bath = bath_from_tau(tau, gammas[i]);
      return optimize_wh([&](double wc, double wh) { return omega_high_t_strong(wc, wh, bath); },
                         4.0 / zc)
          .cop;
    });
    window_checks(s, "strong_wh.tau=" + t, "optimize wh", scan_h, zeta_minus, zeta_yc, zc, true, 5);
  }

  const BathSpec mid = bath_from_tau(0.5, 1.0);
  const auto example =
      optimize_wc([&](double wc, double wh) { return omega_high_t_strong(wc, wh, mid); });
  // 30-digit evaluation of the closed form
  constexpr double kMofHalf = 0.7032030088296072;
  s.near("strong.example", "optimized COP at tau=0.5, gamma=1", example.cop, kMofHalf, 1e-6, 4);
  s.near("strong.example_closed", "closed-form COP at tau=0.5, gamma=1", cop_mof_strong(0.5, 1.0), kMofHalf,
         1e-12);

  // The strong-coupling objective is homogeneous of degree one in (wc, wh): a
  // joint maximum over a box sits on its upper wh edge and grows with the box.
  double ratio_spread = 0.0;
  for (double wh : {0.5, 2.0}) {
    const double a = optimize_wc([&](double wc, double w) { return omega_high_t_strong(wc * wh, w * wh, mid); }).x;
    ratio_spread = std::max(ratio_spread, std::abs(a - example.x));
  }
  s.small("strong.scale_invariance", "spread of wc*/wh across wh in {0.5, 1, 2}", ratio_spread, tol);
  auto joint = [&](double edge) {
    Box box;
    box.lo = {1e-9 * edge, 1e-9 * edge};
    box.hi = {edge, edge};
    return maximize_box([&](double wc, double wh) { return omega_high_t_strong(wc, wh, mid); }, box,
                        1e-10 * edge);
  };
  const auto j1 = joint(1.0);
  const auto j2 = joint(2.0);
  s.near("strong.joint_edge", "joint (wc, wh) maximum: wh at the upper box edge", j1.argmax[1], 1.0, tol);
  s.near("strong.joint_ratio", "joint maximum: wc/wh equals the fixed-wh optimum",
         j1.argmax[0] / j1.argmax[1], optimal_wc_strong(0.5, 1.0, 1.0), tol);
  s.near("strong.joint_scaling", "joint maximum value doubles with the box edge", j2.value / j1.value,
         2.0, tol);
  return s.take();
}

VerificationReport suite_bounds_weak(const VerifyOptions& opt) {
  Suite s("bounds_weak", opt);
  const double tol = s.headline(kOptimizerTol);
  for (double zc : {0.5, 1.0, 5.0}) {
    const BathSpec bath = bath_from_zeta(zc);
    const std::string z = fmt(zc);
    auto eq = [&](Regime limit) {
      return [&bath, limit](double wc, double wh) { return omega_high_t_weak(wc, wh, bath, 1.0, limit); };
    };
    const double mm = optimize_wh(eq(Regime::HighTWeakGammaInf), 4.0 / zc).cop;
    const double m = optimize_wh(eq(Regime::HighTWeakGamma0), 4.0 / zc).cop;
    const double p = optimize_wc(eq(Regime::HighTWeakGammaInf)).cop;
    const double pp = optimize_wc(eq(Regime::HighTWeakGamma0)).cop;
    s.near("weak.minusminus." + z, "gamma->inf limit optimized over wh vs zeta_-- at zeta_C=" + z, mm,
           zeta_minus_minus(zc), tol, 6);
    s.near("weak.minus." + z, "gamma->0 limit optimized over wh vs zeta_- at zeta_C=" + z, m,
           zeta_minus(zc), tol, 6);
    s.near("weak.plus." + z, "gamma->inf limit optimized over wc vs zeta_+ at zeta_C=" + z, p,
           zeta_plus(zc), tol, 6);
    s.near("weak.plusplus." + z, "gamma->0 limit optimized over wc vs zeta_++ at zeta_C=" + z, pp,
           zeta_plus_plus(zc), tol, 6);
  }
  const double c = 2.0 / 3.0;
  s.near("weak.minusminus_guard", "zeta_-- at the removable point zeta_C = 2/3", zeta_minus_minus(c),
         3.0 / 7.0, 1e-15, 6);
  double jump = 0.0;
  for (double side : {-1.0, 1.0}) {
    const double edge = c + side * kMinusMinusGuard;
    jump = std::max(jump, std::abs(zeta_minus_minus(edge * (1 + 1e-12)) - zeta_minus_minus(edge * (1 - 1e-12))));
  }
  s.small("weak.minusminus_continuity", "jump of zeta_-- across the guard edges", jump, 1e-9, 6);
  const auto b = bound_functions(1.0);
  s.near("weak.example_mm", "zeta_--(1) = sqrt(7) - 2", b.zeta_mm, std::sqrt(7.0) - 2.0, kMachineTol);
  s.near("weak.example_pp", "zeta_++(1) = (4 + sqrt(7)) / 9", b.zeta_pp, (4.0 + std::sqrt(7.0)) / 9.0,
         kMachineTol);
  return s.take();
}

VerificationReport suite_series(const VerifyOptions& opt) {
  Suite s("series", opt);
  const double tol = s.headline(kSeriesTol);
  for (std::string_view name : series_names()) {
    const SeriesCoefficients ref = series_reference(name);
    const SeriesFit fit = fit_asymptotic_series(series_function(name), kDefaultSeriesSamples,
                                                kDefaultSeriesHeldOut, ref.basis);
    const double err =
        std::max({std::abs(fit.a - ref.a), std::abs(fit.b - ref.b), std::abs(fit.c - ref.c)});
    s.small("series." + std::string(name), "fitted vs stored coefficients of " + ref.expression, err, tol,
            7);
  }
  const auto exact = fit_asymptotic_series(
      [](double x) { return 2.0 / 3.0 * x + 1.0 / 18.0 - 16.0 / 216.0 / x; });
  s.small("series.exact_model", "held-out residual when fitting an exact a x + b + c/x", exact.residual,
          1e-10);

  // Second terms in (--, -, YC, +, ++) step by 1/18; third terms' steps themselves step by 2/216.
  const std::array<const char*, 5> order{"minusminus", "minus", "YC", "plus", "plusplus"};
  double b_dev = 0.0;
  double c_dev = 0.0;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const auto lo = series_reference(order[i - 1]);
    const auto hi = series_reference(order[i]);
    b_dev = std::max(b_dev, std::abs(hi.b - lo.b - 1.0 / 18.0));
    if (i >= 2) {
      const auto lower = series_reference(order[i - 2]);
      c_dev = std::max(c_dev, std::abs((hi.c - lo.c) - (lo.c - lower.c) - 2.0 / 216.0));
    }
  }
  const double ulps = 8.0 * std::numeric_limits<double>::epsilon();
  s.small("series.second_terms", "stored second terms step by exactly 1/18", b_dev, ulps, 7);
  s.small("series.third_terms", "steps of stored third terms step by exactly 2/216", c_dev, ulps);
  return s.take();
}

VerificationReport suite_cp_ratios(const VerifyOptions& opt) {
  Suite s("cp_ratios", opt);
  const double tol = s.headline(kOptimizerTol);
  const auto small_z = cp_ratios(1e-9);
  s.near("cp.r_inf_small", "R_inf at zeta_C = 1e-9", small_z.gamma_inf, 0.292893, 1e-6, 8);
  s.near("cp.r_zero_small", "R_zero at zeta_C = 1e-9", small_z.gamma_zero, 0.75, 1e-6, 8);
  const auto big = cp_ratios(1e9);
  s.near("cp.ratio_large", "R_zero / R_inf at zeta_C = 1e9", big.gamma_zero / big.gamma_inf, 4.0, 1e-6, 8);
  const auto huge = cp_ratios(1e7);
  s.small("cp.r_inf_decay", "R_inf at zeta_C = 1e7", huge.gamma_inf, 1e-3, 8);
  s.small("cp.r_zero_decay", "R_zero at zeta_C = 1e7", huge.gamma_zero, 1e-3, 8);
  const auto one = cp_ratios(1.0);
  s.near("cp.r_inf_one", "R_inf at zeta_C = 1", one.gamma_inf, 0.183503, 1e-6);
  s.near("cp.r_zero_one", "R_zero at zeta_C = 1", one.gamma_zero, 5.0 / 9.0, 1e-12);

  double identity = 0.0;
  for (double zc : log_grid(1e-3, 1e6, 200)) {
    const auto r = cp_ratios(zc);
    const auto at = cp_at_mof(zc);
    const auto best = optimal_cp(zc);
    identity = std::max({identity, std::abs(at.gamma_inf / best.gamma_inf - r.gamma_inf) / r.gamma_inf,
                         std::abs(at.gamma_zero / best.gamma_zero - r.gamma_zero) / r.gamma_zero});
  }
  s.small("cp.identity", "ratios equal cooling power at MOF over optimal cooling power", identity, kMachineTol);

  // Interior maxima of the scaled cooling power at MOF.
  const FigureGrid grid{0.01, 50.0, 5000, false};
  const Table fig4 = figure_table(4, grid);
  for (const char* column : {"cp_mof_gamma_inf_scaled", "cp_mof_gamma_zero_scaled"}) {
    const InteriorMaximum m = interior_maximum(fig4, "zeta_C", column);
    s.holds(std::string("cp.interior_max.") + column,
            std::string(column) + " has an interior maximum on (0, 50]" +
                (m.found ? " at zeta_C ~ " + fmt(m.location) : ""),
            m.location, m.found, 10);
  }

  // Closed forms against the regime cooling power at the limiting optimal frequencies.
  double closed_gap = 0.0;
  double argmax_gap = 0.0;
  for (double zc : {0.5, 1.0, 5.0}) {
    const double tau = tau_from_carnot_cop(zc);
    const double wh = 1.0;
    const auto limits = cp_at_mof(zc);
    // gamma = 1e12 and 1e-12 stand in for the limits; the finite-gamma
    // correction is a factor 1 + O(1e-12).
    const BathSpec inf_bath = BathSpec::make(tau, 1.0, 1.0, 1e12);
    const double wc_inf = optimal_wc_strong_gamma_inf(zc, wh);
    const double cp_inf = cooling_high_t_strong(wc_inf, wh, inf_bath) / (inf_bath.gamma_c * wh);
    closed_gap = std::max(closed_gap, std::abs(cp_inf - limits.gamma_inf) / limits.gamma_inf);
    const BathSpec zero_bath = BathSpec::make(tau, 1.0, 1e12, 1.0);
    const double wc_zero = optimal_wc_strong_gamma_zero(zc, wh);
    const double cp_zero = cooling_high_t_strong(wc_zero, wh, zero_bath) / (zero_bath.gamma_h * wh);
    closed_gap = std::max(closed_gap, std::abs(cp_zero - limits.gamma_zero) / limits.gamma_zero);

    // The limiting optimal cold frequencies against the optimizer at extreme gamma.
    const auto num_inf = optimize_wc([&](double wc, double w) {
      return omega_high_t_strong(wc, w, bath_from_tau(tau, 1e9));
    });
    const auto num_zero = optimize_wc([&](double wc, double w) {
      return omega_high_t_strong(wc, w, bath_from_tau(tau, 1e-9));
    });
    argmax_gap = std::max({argmax_gap, std::abs(num_inf.x - wc_inf), std::abs(num_zero.x - wc_zero)});
  }
  s.small("cp.closed_vs_regime",
          "scaled cooling power at MOF vs strong-coupling cooling power at the limiting wc*", closed_gap,
          1e-9, 10);
  s.small("cp.limit_frequencies", "limiting wc* vs optimizer at gamma = 1e9 and 1e-9", argmax_gap, tol);
  return s.take();
}

VerificationReport suite_chi_compare(const VerifyOptions& opt) {
  Suite s("chi_compare", opt);
  const double tol = s.headline(kOptimizerTol);
  const std::size_t n = 400;
  double below = -std::numeric_limits<double>::infinity();
  double above = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double lo_z = std::pow(10.0, -1.0 + static_cast<double>(i) / static_cast<double>(n));
    const double hi_z = std::pow(10.0, 2.0 * static_cast<double>(i + 1) / static_cast<double>(n));
    below = std::max(below, zeta_minus_minus(lo_z) - chi_cop_functions(lo_z).chi_plus_plus);
    above = std::min(above, zeta_minus_minus(hi_z) - chi_cop_functions(hi_z).chi_plus_plus);
  }
  s.holds("chi.below_one", "max of zeta_-- - zeta^chi_++ on [0.1, 1) is negative", below, below < 0.0, 9);
  s.holds("chi.above_one", "min of zeta_-- - zeta^chi_++ on (1, 100] is positive", above, above > 0.0, 9);
  s.small("chi.at_one", "|zeta_-- - zeta^chi_++| at zeta_C = 1",
          std::abs(zeta_minus_minus(1.0) - chi_cop_functions(1.0).chi_plus_plus), kMachineTol, 9);
  const auto c1 = chi_cop_functions(1.0);
  s.near("chi.ca_one", "zeta_CA(1) = sqrt(2) - 1", c1.zeta_ca, std::sqrt(2.0) - 1.0, kMachineTol);
  s.near("chi.plus_one", "zeta^chi_+(1) = (sqrt(17) - 3) / 2", c1.chi_plus, (std::sqrt(17.0) - 3.0) / 2.0,
         kMachineTol);
  s.near("chi.plusplus_one", "zeta^chi_++(1) = sqrt(7) - 2", c1.chi_plus_plus, std::sqrt(7.0) - 2.0,
         kMachineTol);

  // chi optimized numerically in the limiting regimes.
  for (double zc : {0.5, 1.0, 5.0}) {
    const double tau = tau_from_carnot_cop(zc);
    const auto ref = chi_cop_functions(zc);
    const std::string z = fmt(zc);
    auto strong = [tau](double gamma) {
      return [tau, gamma](double wc, double wh) {
        return regime_chi(Regime::HighTStrong, bath_from_tau(tau, gamma), DriveSpec{wc, wh, 1.0});
      };
    };
    const BathSpec weak_bath = bath_from_zeta(zc);
    auto weak = [&weak_bath](Regime limit) {
      return [&weak_bath, limit](double wc, double wh) {
        return regime_chi(limit, weak_bath, DriveSpec{wc, wh, 1.0});
      };
    };
    s.near("chi.strong_wc_large." + z, "strong coupling, optimize wc, gamma=1e9 vs zeta_CA at zeta_C=" + z,
           optimize_wc(strong(1e9)).cop, ref.zeta_ca, tol);
    s.near("chi.strong_wc_small." + z, "strong coupling, optimize wc, gamma=1e-9 vs zeta^chi_+ at zeta_C=" + z,
           optimize_wc(strong(1e-9)).cop, ref.chi_plus, tol);
    s.near("chi.strong_wh_small." + z, "strong coupling, optimize wh, gamma=1e-9 vs zeta_CA at zeta_C=" + z,
           optimize_wh(strong(1e-9), 8.0 / zc).cop, ref.zeta_ca, tol);
    s.near("chi.weak_wc_inf." + z, "weak coupling gamma->inf, optimize wc vs zeta^chi_+ at zeta_C=" + z,
           optimize_wc(weak(Regime::HighTWeakGammaInf)).cop, ref.chi_plus, tol);
    s.near("chi.weak_wc_zero." + z, "weak coupling gamma->0, optimize wc vs zeta^chi_++ at zeta_C=" + z,
           optimize_wc(weak(Regime::HighTWeakGamma0)).cop, ref.chi_plus_plus, tol);
  }
  return s.take();
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"oracle", "low_t", "bounds_strong", "bounds_weak",
                                              "series", "cp_ratios", "chi_compare"};
  return names;
}

VerificationReport run_suite(std::string_view name, const VerifyOptions& options) {
  if (options.tol && !(*options.tol > 0.0)) throw ValidationError("tol", "must be positive");
  if (name == "oracle") return suite_oracle(options);
  if (name == "low_t") return suite_low_t(options);
  if (name == "bounds_strong") return suite_bounds_strong(options);
  if (name == "bounds_weak") return suite_bounds_weak(options);
  if (name == "series") return suite_series(options);
  if (name == "cp_ratios") return suite_cp_ratios(options);
  if (name == "chi_compare") return suite_chi_compare(options);
  throw ValidationError("suite", "unknown suite '" + std::string(name) + "'");
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("QTR_SEED"); env != nullptr && *env != '\0') {
    const std::string text(env);
    if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 20) {
      throw ValidationError("QTR_SEED", "must be a non-negative integer, got '" + text + "'");
    }
    try {
      return std::stoull(text);
    } catch (const std::exception&) {
      throw ValidationError("QTR_SEED", "out of range: '" + text + "'");
    }
  }
  return kDefaultSeed;
}

Table report_table(const std::vector<VerificationReport>& reports) {
  Table t;
  t.columns = {"suite", "id", "criterion", "description", "measured", "expected", "tolerance", "result"};
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      t.add_row({r.suite, c.id, static_cast<double>(c.criterion), c.description, c.measured, c.expected,
                 c.tolerance, std::string(c.pass ? "pass" : "FAIL")});
    }
  }
  return t;
}

}  // namespace qtr::harness
