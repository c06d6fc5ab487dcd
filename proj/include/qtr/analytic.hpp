// analytic.hpp: Closed-form optima, COP bounds, cooling-power ratios and the
// stored near-equilibrium series of the optimal COPs.
//
// Everything here is a function of the Carnot COP zeta_C (or of tau = Tc/Th and
// gamma = Gh/Gc). Forms that suffer cancellation for large zeta_C are evaluated
// after rationalizing the square roots, e.g.
//   zeta_YC = zeta_C / (sqrt((2+zeta_C)(1+zeta_C)) - zeta_C)
//           = zeta_C (sqrt((2+zeta_C)(1+zeta_C)) + zeta_C) / (2 + 3 zeta_C).

#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "qtr/optimize.hpp"

namespace qtr {

// zeta_C from tau and back.
double carnot_cop_from_tau(double tau);
double tau_from_carnot_cop(double zeta_c);

// ---- Low-temperature two-parameter optimum ------------------------------------

struct LowTOptimum {
  double wc{0.0};
  double wh{0.0};
  double cop{0.0};
};

// k = ln((1 + zeta_C) / (2 + zeta_C)); the optimum satisfies wc/Tc - wh/Th = k.
double low_t_log_ratio(double zeta_c);
double cop_ssd_low_t(double zeta_c);
LowTOptimum low_t_optimal_frequencies(double zeta_c, double tc);

// ---- High-temperature strong coupling, optimizing wc at fixed wh ---------------

// Optimal cold frequency. Evaluated in the rationalized form
//   wc* = tau (3 + gamma - tau) wh / (2 - tau + sqrt((1+gamma)(2-tau)(2+gamma-tau))),
// identical to tau (2 - tau - sqrt(...)) wh / (gamma (tau - 2)) but free of the
// 0/0 at gamma -> 0.
double optimal_wc_strong(double tau, double gamma, double wh);
double cop_mof_strong(double tau, double gamma);

// gamma -> infinity and gamma -> 0 limits of optimal_wc_strong.
double optimal_wc_strong_gamma_inf(double zeta_c, double wh);
double optimal_wc_strong_gamma_zero(double zeta_c, double wh);

// ---- COP bounds ---------------------------------------------------------------

struct BoundFamily {
  double zeta_mm{0.0};  // weak coupling, wc fixed, gamma -> infinity
  double zeta_m{0.0};   // 2 zeta_C / 3
  double zeta_yc{0.0};
  double zeta_p{0.0};
  double zeta_pp{0.0};  // weak coupling, wh fixed, gamma -> 0
};

// zeta_--(zeta_C) = zeta_C (zeta_C - 3 + sqrt(Q)) / (3 zeta_C - 2), Q = 3 + zeta_C (3 + zeta_C).
// The 0/0 at zeta_C = 2/3 is removable; within kMinusMinusGuard of it the value is
// taken from the equivalent form zeta_C / (1 + (1 + zeta_C)/(sqrt(Q) + zeta_C)),
// which equals 3/7 at the point.
inline constexpr double kMinusMinusGuard = 1e-6;

double zeta_minus_minus(double zeta_c);
double zeta_minus(double zeta_c);
double zeta_yc(double zeta_c);
double zeta_plus(double zeta_c);
double zeta_plus_plus(double zeta_c);
double zeta_mni(double zeta_c);

BoundFamily bound_functions(double zeta_c);

// ---- chi-criterion COPs -------------------------------------------------------

struct ChiCops {
  double zeta_ca{0.0};   // sqrt(1 + zeta_C) - 1
  double chi_plus{0.0};  // (sqrt(9 + 8 zeta_C) - 3) / 2
  double chi_plus_plus{0.0};  // sqrt(4 + 3 zeta_C) - 2
};

ChiCops chi_cop_functions(double zeta_c);

// ---- Cooling power at maximum Omega vs. maximum cooling power -------------------
// "Scaled" values are divided by Gc*wh (gamma -> infinity) or Gh*wh (gamma -> 0).

struct LimitPair {
  double gamma_inf{0.0};
  double gamma_zero{0.0};
};

LimitPair cp_at_mof(double zeta_c);     // cooling power at maximum Omega
LimitPair optimal_cp(double zeta_c);    // maximum cooling power over wc
LimitPair omega_at_mof(double zeta_c);  // the maximal Omega itself
LimitPair cp_ratios(double zeta_c);     // cp_at_mof / optimal_cp

// ---- Stored series ------------------------------------------------------------

struct SeriesCoefficients {
  std::string name;
  double a{0.0};
  double b{0.0};
  double c{0.0};
  SeriesBasis basis{SeriesBasis::Laurent};
  std::string expression;  // human-readable series, e.g. "2/3·ζC + 1/9 − (4/27)/ζC"
};

std::span<const std::string_view> series_names();
/// Throws ValidationError for an unknown name.
SeriesCoefficients series_reference(std::string_view name);
/// The closed-form COP whose expansion series_reference(name) stores.
std::function<double(double)> series_function(std::string_view name);

}  // namespace qtr
