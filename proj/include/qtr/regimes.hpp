// regimes.hpp: Limiting forms of the Omega function used as optimization targets.
//
// Every form shares the structure Omega = J * ((2 + zeta_C) wc - zeta_C wh) with a
// regime-specific cycle flux J; cooling power is J * wc. Occupations follow the
// regime: n = exp(-w/T) at low temperature, n = T/w at high temperature.
//
// Cooling power in the high-temperature strong-coupling regime is
//   Qc = 2 Gh wc (tau wh - wc) / (3 (gamma wc + tau wh)),
// the lambda -> infinity, n = T/w limit of the full cooling power: with
// n_c - n_h = (Tc wh - Th wc)/(wc wh) and denominator -> 3 lambda^2 (nh Gh + nc Gc)
// the factor wc from Qc = J wc survives, and at the Omega-optimal cold frequency
// this reproduces the closed-form cooling powers in analytic.hpp.

#pragma once

#include <string_view>

#include "qtr/core_model.hpp"

namespace qtr {

enum class Regime {
  Full,               // exact steady state with Bose occupations
  LowTemperature,     // w >> T, n = exp(-w/T)
  HighTStrong,        // w << T, lambda >> Gamma n
  HighTWeak,          // w << T, lambda << Gamma n (weak or intermediate coupling)
  HighTWeakGammaInf,  // weak coupling with Gc << Gh
  HighTWeakGamma0,    // weak coupling with Gh << Gc
};

std::string_view to_string(Regime regime);
Regime parse_regime(std::string_view name);

double omega_low_temperature(double wc, double wh, const BathSpec& bath, double lambda);
double omega_high_t_strong(double wc, double wh, const BathSpec& bath);
double cooling_high_t_strong(double wc, double wh, const BathSpec& bath);
// `limit` is one of HighTWeak, HighTWeakGammaInf, HighTWeakGamma0.
double omega_high_t_weak(double wc, double wh, const BathSpec& bath, double lambda, Regime limit);

// Regime cycle flux J (see header comment); lambda is ignored by HighTStrong.
double regime_cycle_flux(Regime regime, const BathSpec& bath, const DriveSpec& drive);

double regime_omega(Regime regime, const BathSpec& bath, const DriveSpec& drive);
double regime_cooling_power(Regime regime, const BathSpec& bath, const DriveSpec& drive);
double regime_chi(Regime regime, const BathSpec& bath, const DriveSpec& drive);

}  // namespace qtr
