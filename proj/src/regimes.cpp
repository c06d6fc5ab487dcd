#include "qtr/regimes.hpp"

#include <cmath>
#include <string>

#include "qtr/errors.hpp"
#include "qtr/thermodynamics.hpp"

namespace qtr {
namespace {

double omega_bracket(double wc, double wh, double zc) { return (2.0 + zc) * wc - zc * wh; }

double flux_low_temperature(double wc, double wh, const BathSpec& b, double lambda) {
  const double nc = std::exp(-wc / b.tc);
  const double nh = std::exp(-wh / b.th);
  const double l2 = lambda * lambda;
  const double g2 = b.gamma_c * b.gamma_h;
  return 2.0 * l2 * g2 * (nc - nh) / ((b.gamma_c + b.gamma_h) * (l2 + g2));
}

double flux_high_t_strong(double wc, double wh, const BathSpec& b) {
  const double tau = b.tau();
  const double den = 3.0 * (b.gamma_ratio() * wc + tau * wh);
  if (!(den != 0.0)) throw NumericalError("high-T strong flux: vanishing denominator");
  return 2.0 * b.gamma_h * (tau * wh - wc) / den;
}

double flux_high_t_weak(double wc, double wh, const BathSpec& b, double lambda, Regime limit) {
  const double nc = b.tc / wc;
  const double nh = b.th / wh;
  double den = 0.0;
  switch (limit) {
    case Regime::HighTWeak:
      den = 3.0 * nh * nc * nc * b.gamma_c + 3.0 * nc * nh * nh * b.gamma_h;
      break;
    case Regime::HighTWeakGammaInf:
      den = 3.0 * nc * nh * nh * b.gamma_h;
      break;
    case Regime::HighTWeakGamma0:
      den = 3.0 * nh * nc * nc * b.gamma_c;
      break;
    default:
      throw ValidationError("regime", "not a weak-coupling limit: " + std::string(to_string(limit)));
  }
  return 2.0 * lambda * lambda * (nc - nh) / den;
}

}  // namespace

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::Full: return "full";
    case Regime::LowTemperature: return "low_t";
    case Regime::HighTStrong: return "high_t_strong";
    case Regime::HighTWeak: return "high_t_weak";
    case Regime::HighTWeakGammaInf: return "high_t_weak_gamma_inf";
    case Regime::HighTWeakGamma0: return "high_t_weak_gamma_0";
  }
  return "unknown";
}

Regime parse_regime(std::string_view name) {
  for (Regime r : {Regime::Full, Regime::LowTemperature, Regime::HighTStrong, Regime::HighTWeak,
                   Regime::HighTWeakGammaInf, Regime::HighTWeakGamma0}) {
    if (to_string(r) == name) return r;
  }
  throw ValidationError("regime", "unknown regime '" + std::string(name) + "'");
}

double omega_low_temperature(double wc, double wh, const BathSpec& bath, double lambda) {
  return flux_low_temperature(wc, wh, bath, lambda) * omega_bracket(wc, wh, bath.carnot_cop());
}

double omega_high_t_strong(double wc, double wh, const BathSpec& bath) {
  return flux_high_t_strong(wc, wh, bath) * omega_bracket(wc, wh, bath.carnot_cop());
}

double cooling_high_t_strong(double wc, double wh, const BathSpec& bath) {
  return flux_high_t_strong(wc, wh, bath) * wc;
}

double omega_high_t_weak(double wc, double wh, const BathSpec& bath, double lambda, Regime limit) {
  return flux_high_t_weak(wc, wh, bath, lambda, limit) * omega_bracket(wc, wh, bath.carnot_cop());
}

double regime_cycle_flux(Regime regime, const BathSpec& bath, const DriveSpec& d) {
  switch (regime) {
    case Regime::Full:
      return cycle_flux_closed_form(Occupations::thermal(bath, d), Couplings::from(bath, d));
    case Regime::LowTemperature:
      return flux_low_temperature(d.wc, d.wh, bath, d.lambda);
    case Regime::HighTStrong:
      return flux_high_t_strong(d.wc, d.wh, bath);
    case Regime::HighTWeak:
    case Regime::HighTWeakGammaInf:
    case Regime::HighTWeakGamma0:
      return flux_high_t_weak(d.wc, d.wh, bath, d.lambda, regime);
  }
  throw ValidationError("regime", "unhandled regime");
}

double regime_omega(Regime regime, const BathSpec& bath, const DriveSpec& d) {
  return regime_cycle_flux(regime, bath, d) * omega_bracket(d.wc, d.wh, bath.carnot_cop());
}

double regime_cooling_power(Regime regime, const BathSpec& bath, const DriveSpec& d) {
  return regime_cycle_flux(regime, bath, d) * d.wc;
}

double regime_chi(Regime regime, const BathSpec& bath, const DriveSpec& d) {
  return cop(d) * regime_cooling_power(regime, bath, d);
}

}  // namespace qtr
