// thermodynamics.hpp: Heat currents, input power and trade-off figures of merit.
//
// Sign convention: P and Qc_dot are both positive inside the refrigeration
// window n_c > n_h, i.e. P = i*lambda*(wh - wc)*(rho10 - rho01) and
// Qc_dot = i*lambda*wc*(rho10 - rho01). With rho10 = i*x both reduce to
// -2*lambda*x times the transition frequency, so the device is tightly coupled:
// every cycle moves wc out of the cold bath, takes wh - wc from the field and
// dumps wh into the hot bath.

#pragma once

#include "qtr/core_model.hpp"

namespace qtr {

struct Metrics {
  double power{0.0};          // P
  double cooling_power{0.0};  // Qc_dot
  double hot_flux{0.0};       // Qh_dot (rejected heat, positive when refrigerating)
  double cop{0.0};            // zeta
  double omega{0.0};          // 2 Qc_dot - zeta_C P
  double chi{0.0};            // zeta Qc_dot
};

// Cycle flux J = 2*lambda*(-Im rho10): excitations per unit time carried g -> 0 -> 1 -> g.
double cycle_flux(const SteadyState& ss, const DriveSpec& drive);

double input_power(const SteadyState& ss, const DriveSpec& drive);
double cooling_power(const SteadyState& ss, const DriveSpec& drive);
double hot_flux(const SteadyState& ss, const DriveSpec& drive);

// Rejected heat from the operator route, -Tr(L_h[rho] H0) with H0 = diag(0, wc, wh).
double hot_flux_from_dissipator(const SteadyState& ss, const DriveSpec& drive, double nh,
                                double gamma_h);
// Cooling power from the operator route, Tr(L_c[rho] H0).
double cooling_power_from_dissipator(const SteadyState& ss, const DriveSpec& drive, double nc,
                                     double gamma_c);

/// wc / (wh - wc). Throws ValidationError unless wh > wc.
double cop(const DriveSpec& drive);

double omega_function(const SteadyState& ss, const DriveSpec& drive, double carnot_cop);
double chi_function(const SteadyState& ss, const DriveSpec& drive);

Metrics evaluate_metrics(const SteadyState& ss, const DriveSpec& drive, double carnot_cop);

// Parameter-level closed forms (no SteadyState): the cycle flux
// 2 lambda^2 Gc Gh (nc - nh) / D, cooling power J*wc and Omega
// J*((2 + zeta_C) wc - zeta_C wh).
double cycle_flux_closed_form(const Occupations& occ, const Couplings& rates);
double cooling_power_closed_form(const Occupations& occ, const Couplings& rates, double wc);
double omega_closed_form(const Occupations& occ, const Couplings& rates, const DriveSpec& drive,
                         double carnot_cop);

// Thermal-occupation convenience overloads.
double cooling_power_closed_form(const BathSpec& bath, const DriveSpec& drive);
double omega_closed_form(const BathSpec& bath, const DriveSpec& drive);

}  // namespace qtr
