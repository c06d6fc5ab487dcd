#include "qtr/thermodynamics.hpp"

#include "qtr/errors.hpp"

namespace qtr {

double cycle_flux(const SteadyState& ss, const DriveSpec& drive) {
  return -2.0 * drive.lambda * ss.rho10.imag();
}

double input_power(const SteadyState& ss, const DriveSpec& drive) {
  return (drive.wh - drive.wc) * cycle_flux(ss, drive);
}

double cooling_power(const SteadyState& ss, const DriveSpec& drive) {
  return drive.wc * cycle_flux(ss, drive);
}

double hot_flux(const SteadyState& ss, const DriveSpec& drive) {
  return drive.wh * cycle_flux(ss, drive);
}

double hot_flux_from_dissipator(const SteadyState& ss, const DriveSpec& drive, double nh,
                                double gamma_h) {
  const DensityMatrix d = apply_hot_dissipator(ss.density(), nh, gamma_h);
  return -(drive.wc * d(level::cold, level::cold).real() + drive.wh * d(level::hot, level::hot).real());
}

double cooling_power_from_dissipator(const SteadyState& ss, const DriveSpec& drive, double nc,
                                     double gamma_c) {
  const DensityMatrix d = apply_cold_dissipator(ss.density(), nc, gamma_c);
  return drive.wc * d(level::cold, level::cold).real() + drive.wh * d(level::hot, level::hot).real();
}

double cop(const DriveSpec& drive) {
  if (!(drive.wh > drive.wc)) throw ValidationError("wh", "must be greater than wc");
  return drive.wc / (drive.wh - drive.wc);
}

double omega_function(const SteadyState& ss, const DriveSpec& drive, double carnot_cop) {
  return 2.0 * cooling_power(ss, drive) - carnot_cop * input_power(ss, drive);
}

double chi_function(const SteadyState& ss, const DriveSpec& drive) {
  return cop(drive) * cooling_power(ss, drive);
}

Metrics evaluate_metrics(const SteadyState& ss, const DriveSpec& drive, double carnot_cop) {
  Metrics m;
  m.power = input_power(ss, drive);
  m.cooling_power = cooling_power(ss, drive);
  m.hot_flux = hot_flux(ss, drive);
  m.cop = cop(drive);
  m.omega = omega_function(ss, drive, carnot_cop);
  m.chi = m.cop * m.cooling_power;
  return m;
}

double cycle_flux_closed_form(const Occupations& occ, const Couplings& r) {
  return 2.0 * r.lambda * r.lambda * r.gamma_c * r.gamma_h * (occ.nc - occ.nh) /
         coherence_denominator(occ, r);
}

double cooling_power_closed_form(const Occupations& occ, const Couplings& rates, double wc) {
  return cycle_flux_closed_form(occ, rates) * wc;
}

double omega_closed_form(const Occupations& occ, const Couplings& rates, const DriveSpec& drive,
                         double carnot_cop) {
  return cycle_flux_closed_form(occ, rates) *
         ((2.0 + carnot_cop) * drive.wc - carnot_cop * drive.wh);
}

double cooling_power_closed_form(const BathSpec& bath, const DriveSpec& drive) {
  return cooling_power_closed_form(Occupations::thermal(bath, drive), Couplings::from(bath, drive),
                                   drive.wc);
}

double omega_closed_form(const BathSpec& bath, const DriveSpec& drive) {
  return omega_closed_form(Occupations::thermal(bath, drive), Couplings::from(bath, drive), drive,
                           bath.carnot_cop());
}

}  // namespace qtr
