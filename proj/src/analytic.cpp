#include "qtr/analytic.hpp"

#include <array>
#include <cmath>
#include <string>

#include "qtr/errors.hpp"

namespace qtr {
namespace {

void require_positive_cop(double zeta_c) {
  if (!(zeta_c > 0.0) || !std::isfinite(zeta_c)) {
    throw ValidationError("zeta_c", "Carnot COP must be positive and finite");
  }
}

void require_tau_gamma(double tau, double gamma) {
  if (!(tau > 0.0 && tau < 1.0)) throw ValidationError("tau", "must lie in (0, 1)");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw ValidationError("gamma", "must be positive and finite");
  }
}

// Ratio wc*/wh at the strong-coupling optimum.
double strong_ratio(double tau, double gamma) {
  const double s = (1.0 + gamma) * (2.0 - tau) * (2.0 + gamma - tau);
  return tau * (3.0 + gamma - tau) / (2.0 - tau + std::sqrt(s));
}

constexpr std::array<std::string_view, 10> kSeriesNames = {
    "SSD", "YC", "MNI", "minus", "minusminus", "plus", "plusplus",
    "CA_chi", "plus_chi", "plusplus_chi"};

}  // namespace

double carnot_cop_from_tau(double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw ValidationError("tau", "must lie in (0, 1)");
  return tau / (1.0 - tau);
}

double tau_from_carnot_cop(double zeta_c) {
  require_positive_cop(zeta_c);
  return zeta_c / (1.0 + zeta_c);
}

double low_t_log_ratio(double zeta_c) {
  require_positive_cop(zeta_c);
  return -std::log1p(1.0 / (1.0 + zeta_c));
}

double cop_ssd_low_t(double zeta_c) {
  const double k = low_t_log_ratio(zeta_c);
  return zeta_c * (1.0 - (1.0 + zeta_c) * k) / (1.0 - 2.0 * (1.0 + zeta_c) * k);
}

LowTOptimum low_t_optimal_frequencies(double zeta_c, double tc) {
  if (!(tc > 0.0)) throw ValidationError("tc", "must be positive");
  const double k = low_t_log_ratio(zeta_c);
  const double wc = (1.0 - (1.0 + zeta_c) * k) * tc;
  const double wh = (1.0 + zeta_c) * (1.0 - (2.0 + zeta_c) * k) * tc / zeta_c;
  return {wc, wh, cop_ssd_low_t(zeta_c)};
}

double optimal_wc_strong(double tau, double gamma, double wh) {
  require_tau_gamma(tau, gamma);
  if (!(wh > 0.0)) throw ValidationError("wh", "must be positive");
  return strong_ratio(tau, gamma) * wh;
}

double cop_mof_strong(double tau, double gamma) {
  require_tau_gamma(tau, gamma);
  const double r = strong_ratio(tau, gamma);
  return r / (1.0 - r);
}

double optimal_wc_strong_gamma_inf(double zeta_c, double wh) {
  require_positive_cop(zeta_c);
  return zeta_c * wh / std::sqrt((1.0 + zeta_c) * (2.0 + zeta_c));
}

double optimal_wc_strong_gamma_zero(double zeta_c, double wh) {
  require_positive_cop(zeta_c);
  return zeta_c * (3.0 + 2.0 * zeta_c) * wh / (2.0 * (1.0 + zeta_c) * (2.0 + zeta_c));
}

double zeta_minus_minus(double zeta_c) {
  require_positive_cop(zeta_c);
  const double root_q = std::sqrt(3.0 + zeta_c * (3.0 + zeta_c));
  if (std::abs(zeta_c - 2.0 / 3.0) < kMinusMinusGuard) {
    return zeta_c / (1.0 + (1.0 + zeta_c) / (root_q + zeta_c));
  }
  return zeta_c * (zeta_c - 3.0 + root_q) / (3.0 * zeta_c - 2.0);
}

double zeta_minus(double zeta_c) {
  require_positive_cop(zeta_c);
  return 2.0 * zeta_c / 3.0;
}

double zeta_yc(double zeta_c) {
  require_positive_cop(zeta_c);
  const double root_p = std::sqrt((2.0 + zeta_c) * (1.0 + zeta_c));
  return zeta_c * (root_p + zeta_c) / (2.0 + 3.0 * zeta_c);
}

double zeta_plus(double zeta_c) {
  require_positive_cop(zeta_c);
  return (3.0 + 2.0 * zeta_c) * zeta_c / (4.0 + 3.0 * zeta_c);
}

double zeta_plus_plus(double zeta_c) {
  require_positive_cop(zeta_c);
  const double root_q = std::sqrt(3.0 + zeta_c * (3.0 + zeta_c));
  return zeta_c * (3.0 + zeta_c + root_q) / (3.0 * (2.0 + zeta_c));
}

double zeta_mni(double zeta_c) {
  require_positive_cop(zeta_c);
  return (3.0 + 4.0 * zeta_c) * zeta_c / (4.0 + 6.0 * zeta_c);
}

BoundFamily bound_functions(double zeta_c) {
  return {zeta_minus_minus(zeta_c), zeta_minus(zeta_c), zeta_yc(zeta_c), zeta_plus(zeta_c),
          zeta_plus_plus(zeta_c)};
}

ChiCops chi_cop_functions(double zeta_c) {
  require_positive_cop(zeta_c);
  return {zeta_c / (std::sqrt(1.0 + zeta_c) + 1.0),
          4.0 * zeta_c / (std::sqrt(9.0 + 8.0 * zeta_c) + 3.0),
          3.0 * zeta_c / (std::sqrt(4.0 + 3.0 * zeta_c) + 2.0)};
}

LimitPair cp_ratios(double zeta_c) {
  require_positive_cop(zeta_c);
  // 1 - sqrt(q) = (1 - q) / (1 + sqrt(q)) with 1 - q = 1 / (2 + zeta_C).
  const double q = (1.0 + zeta_c) / (2.0 + zeta_c);
  const double r_inf = 1.0 / ((2.0 + zeta_c) * (1.0 + std::sqrt(q)));
  const double r_zero = (3.0 + 2.0 * zeta_c) / ((2.0 + zeta_c) * (2.0 + zeta_c));
  return {r_inf, r_zero};
}

LimitPair optimal_cp(double zeta_c) {
  require_positive_cop(zeta_c);
  const double t = zeta_c / (1.0 + zeta_c);
  return {2.0 * t / 3.0, t / 6.0};
}

LimitPair cp_at_mof(double zeta_c) {
  require_positive_cop(zeta_c);
  const double t = zeta_c / (1.0 + zeta_c);
  const double inf = 2.0 * t * cp_ratios(zeta_c).gamma_inf / 3.0;
  const double zero = zeta_c * (3.0 + 2.0 * zeta_c) /
                      (6.0 * (1.0 + zeta_c) * (2.0 + zeta_c) * (2.0 + zeta_c));
  return {inf, zero};
}

LimitPair omega_at_mof(double zeta_c) {
  require_positive_cop(zeta_c);
  const double root_p = std::sqrt((1.0 + zeta_c) * (2.0 + zeta_c));
  // 3 + 2z - 2 sqrt((1+z)(2+z)) = 1 / (3 + 2z + 2 sqrt((1+z)(2+z)))
  const double inf = 2.0 * zeta_c / (3.0 * (1.0 + zeta_c) * (3.0 + 2.0 * zeta_c + 2.0 * root_p));
  const double zero = zeta_c / (6.0 * (1.0 + zeta_c) * (2.0 + zeta_c));
  return {inf, zero};
}

std::span<const std::string_view> series_names() { return kSeriesNames; }

SeriesCoefficients series_reference(std::string_view name) {
  const double r2 = std::sqrt(2.0);
  const double r3 = std::sqrt(3.0);
  const auto laurent = SeriesBasis::Laurent;
  const auto sqrt_laurent = SeriesBasis::SqrtLaurent;
  if (name == "SSD") return {"SSD", 2.0 / 3, 1.0 / 18, -16.0 / 216, laurent, "2/3·ζC + 1/18 − (16/216)/ζC"};
  if (name == "YC") return {"YC", 2.0 / 3, 1.0 / 18, -17.0 / 216, laurent, "2/3·ζC + 1/18 − (17/216)/ζC"};
  if (name == "MNI") return {"MNI", 2.0 / 3, 1.0 / 18, -8.0 / 216, laurent, "2/3·ζC + 1/18 − (8/216)/ζC"};
  if (name == "minus") return {"minus", 2.0 / 3, 0.0, 0.0, laurent, "2/3·ζC"};
  if (name == "minusminus") {
    return {"minusminus", 2.0 / 3, -1.0 / 18, 19.0 / 216, laurent, "2/3·ζC − 1/18 + (19/216)/ζC"};
  }
  if (name == "plus") return {"plus", 2.0 / 3, 1.0 / 9, -4.0 / 27, laurent, "2/3·ζC + 1/9 − (4/27)/ζC"};
  if (name == "plusplus") {
    return {"plusplus", 2.0 / 3, 1.0 / 6, -5.0 / 24, laurent, "2/3·ζC + 1/6 − (5/24)/ζC"};
  }
  if (name == "CA_chi") {
    return {"CA_chi", 1.0, -1.0, 0.5, sqrt_laurent, "ζC^(1/2) − 1 + (1/2)·ζC^(−1/2)"};
  }
  if (name == "plus_chi") {
    return {"plus_chi", r2, -1.5, 9.0 / (8.0 * r2), sqrt_laurent,
            "√2·ζC^(1/2) − 3/2 + (9/(8√2))·ζC^(−1/2)"};
  }
  if (name == "plusplus_chi") {
    return {"plusplus_chi", r3, -2.0, 2.0 / r3, sqrt_laurent, "√3·ζC^(1/2) − 2 + (2/√3)·ζC^(−1/2)"};
  }
  throw ValidationError("series", "unknown series '" + std::string(name) + "'");
}

std::function<double(double)> series_function(std::string_view name) {
  if (name == "SSD") return cop_ssd_low_t;
  if (name == "YC") return zeta_yc;
  if (name == "MNI") return zeta_mni;
  if (name == "minus") return zeta_minus;
  if (name == "minusminus") return zeta_minus_minus;
  if (name == "plus") return zeta_plus;
  if (name == "plusplus") return zeta_plus_plus;
  if (name == "CA_chi") return [](double z) { return chi_cop_functions(z).zeta_ca; };
  if (name == "plus_chi") return [](double z) { return chi_cop_functions(z).chi_plus; };
  if (name == "plusplus_chi") return [](double z) { return chi_cop_functions(z).chi_plus_plus; };
  throw ValidationError("series", "unknown series '" + std::string(name) + "'");
}

}  // namespace qtr
