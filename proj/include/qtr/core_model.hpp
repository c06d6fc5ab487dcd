// core_model.hpp: Three-level refrigerator: parameters, thermal occupations and
// the steady state of the driven GKSL generator in the resonant rotating frame.
//
// Levels are indexed g = 0, |0> = 1 (cold transition), |1> = 2 (hot transition).
// Natural units: hbar = k_B = 1.

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qtr {

inline constexpr double kMinParameter = 1e-12;
inline constexpr double kMaxParameter = 1e12;

struct BathSpec {
  double tc{1.0};       // cold reservoir temperature
  double th{2.0};       // hot reservoir temperature
  double gamma_c{1.0};  // cold system-bath decay constant
  double gamma_h{1.0};  // hot system-bath decay constant

  static BathSpec make(double tc, double th, double gamma_c, double gamma_h);

  double tau() const { return tc / th; }
  double carnot_cop() const { return tc / (th - tc); }
  double gamma_ratio() const { return gamma_h / gamma_c; }
};

struct DriveSpec {
  double wc{1.0};      // cold transition frequency
  double wh{2.0};      // hot transition frequency
  double lambda{1.0};  // matter-field coupling

  static DriveSpec make(double wc, double wh, double lambda);

  // Resonant field frequency.
  double field_frequency() const { return wh - wc; }
};

struct Occupations {
  double nc{0.0};
  double nh{0.0};

  static Occupations make(double nc, double nh);
  static Occupations thermal(const BathSpec& bath, const DriveSpec& drive);
};

// Rates entering the generator: bath decay constants and the drive coupling.
struct Couplings {
  double gamma_c{1.0};
  double gamma_h{1.0};
  double lambda{1.0};

  static Couplings make(double gamma_c, double gamma_h, double lambda);
  static Couplings from(const BathSpec& bath, const DriveSpec& drive) {
    return {bath.gamma_c, bath.gamma_h, drive.lambda};
  }
};

using DensityMatrix = Eigen::Matrix3cd;

namespace level {
inline constexpr int g = 0;
inline constexpr int cold = 1;  // |0>
inline constexpr int hot = 2;   // |1>
}  // namespace level

struct SteadyState {
  double pg{1.0};
  double p0{0.0};
  double p1{0.0};
  std::complex<double> rho10{};  // <1|rho|0>

  DensityMatrix density() const;
};

/// Mean photon number 1/(exp(omega/T) - 1); zero at T = 0.
double bose_occupation(double omega, double temperature);

/// Steady state from the stationary population/coherence balance equations plus
/// the trace condition, solved as a 4x4 real system in (pg, p0, p1, Im rho10).
SteadyState steady_state(const Occupations& occ, const Couplings& rates);

/// Closed-form stationary coherence <1|rho|0>; purely imaginary.
std::complex<double> coherence_closed_form(const Occupations& occ, const Couplings& rates);

/// Denominator of the closed-form coherence (positive for positive rates).
double coherence_denominator(const Occupations& occ, const Couplings& rates);

// Full rotating-frame generator on 3x3 density matrices. `level_energy` is the
// common energy of |0> and |1> in the rotating frame, (wc + wh)/2 for a resonant
// drive; it only rotates the g-coherences and drops out of the steady state.
DensityMatrix apply_generator(const DensityMatrix& rho, const Occupations& occ,
                              const Couplings& rates, double level_energy = 0.0);
DensityMatrix apply_hot_dissipator(const DensityMatrix& rho, double nh, double gamma_h);
DensityMatrix apply_cold_dissipator(const DensityMatrix& rho, double nc, double gamma_c);

// The generator as an 18x18 real map acting on (Re rho_ij, Im rho_ij), row-major
// in (i, j), real parts first.
Eigen::Matrix<double, 18, 18> generator_matrix(const Occupations& occ, const Couplings& rates,
                                               double level_energy = 0.0);

/// Brute-force steady state: null vector of the full 18-dimensional generator,
/// normalized to unit trace. Throws NumericalError when the kernel is not a
/// single complex line.
SteadyState liouvillian_steady_state_oracle(const Occupations& occ, const Couplings& rates,
                                            double level_energy = 0.0);

// Full density matrix from the oracle, g-coherences included.
DensityMatrix liouvillian_steady_density(const Occupations& occ, const Couplings& rates,
                                         double level_energy = 0.0);

}  // namespace qtr
