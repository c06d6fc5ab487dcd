#include "qtr/core_model.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "qtr/detail/balance.hpp"
#include "qtr/errors.hpp"

namespace qtr {
namespace {

void require_range(const char* field, double value) {
  if (!std::isfinite(value) || value < kMinParameter || value > kMaxParameter) {
    std::ostringstream msg;
    msg << "must lie in [1e-12, 1e12], got " << value;
    throw ValidationError(field, msg.str());
  }
}

void require_occupation(const char* field, double value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw ValidationError(field, "occupation must be finite and non-negative");
  }
}

template <class T>
using Mat3 = Eigen::Matrix<std::complex<T>, 3, 3>;

// Lindblad dissipator for a single bath connecting g with `excited`.
template <class T>
Mat3<T> dissipator(const Mat3<T>& rho, int excited, T n, T rate) {
  Mat3<T> out = Mat3<T>::Zero();
  const T down = rate * (n + T(1));
  const T up = rate * n;
  // emission: 2 rho_ee |g><g| - {P_e, rho}
  out(level::g, level::g) += T(2) * down * rho(excited, excited);
  out.row(excited) -= down * rho.row(excited);
  out.col(excited) -= down * rho.col(excited);
  // absorption: 2 rho_gg P_e - {P_g, rho}
  out(excited, excited) += T(2) * up * rho(level::g, level::g);
  out.row(level::g) -= up * rho.row(level::g);
  out.col(level::g) -= up * rho.col(level::g);
  return out;
}

template <class T>
Mat3<T> generator(const Mat3<T>& rho, T nc, T nh, T gamma_c, T gamma_h, T lambda, T energy) {
  Mat3<T> h = Mat3<T>::Zero();
  h(level::cold, level::cold) = energy;
  h(level::hot, level::hot) = energy;
  h(level::hot, level::cold) = lambda;
  h(level::cold, level::hot) = lambda;
  const std::complex<T> minus_i(T(0), T(-1));
  Mat3<T> out = minus_i * (h * rho - rho * h);
  out += dissipator<T>(rho, level::hot, nh, gamma_h);
  out += dissipator<T>(rho, level::cold, nc, gamma_c);
  return out;
}

template <class T>
Eigen::Matrix<T, 18, 18> generator_matrix_t(const Occupations& occ, const Couplings& r,
                                            double level_energy) {
  Eigen::Matrix<T, 18, 18> m;
  for (int k = 0; k < 18; ++k) {
    Mat3<T> basis = Mat3<T>::Zero();
    const int cell = k % 9;
    basis(cell / 3, cell % 3) = k < 9 ? std::complex<T>(1, 0) : std::complex<T>(0, 1);
    const Mat3<T> out = generator<T>(basis, T(occ.nc), T(occ.nh), T(r.gamma_c), T(r.gamma_h),
                                     T(r.lambda), T(level_energy));
    for (int c = 0; c < 9; ++c) {
      m(c, k) = out(c / 3, c % 3).real();
      m(c + 9, k) = out(c / 3, c % 3).imag();
    }
  }
  return m;
}

}  // namespace

BathSpec BathSpec::make(double tc, double th, double gamma_c, double gamma_h) {
  require_range("tc", tc);
  require_range("th", th);
  if (!(tc < th)) throw ValidationError("th", "hot temperature must exceed cold temperature");
  require_range("gc", gamma_c);
  require_range("gh", gamma_h);
  return {tc, th, gamma_c, gamma_h};
}

DriveSpec DriveSpec::make(double wc, double wh, double lambda) {
  require_range("wc", wc);
  require_range("wh", wh);
  if (!(wh > wc)) throw ValidationError("wh", "must be greater than wc");
  require_range("lambda", lambda);
  return {wc, wh, lambda};
}

Occupations Occupations::make(double nc, double nh) {
  require_occupation("nc", nc);
  require_occupation("nh", nh);
  return {nc, nh};
}

Occupations Occupations::thermal(const BathSpec& bath, const DriveSpec& drive) {
  return {bose_occupation(drive.wc, bath.tc), bose_occupation(drive.wh, bath.th)};
}

Couplings Couplings::make(double gamma_c, double gamma_h, double lambda) {
  require_range("gc", gamma_c);
  require_range("gh", gamma_h);
  require_range("lambda", lambda);
  return {gamma_c, gamma_h, lambda};
}

DensityMatrix SteadyState::density() const {
  DensityMatrix rho = DensityMatrix::Zero();
  rho(level::g, level::g) = pg;
  rho(level::cold, level::cold) = p0;
  rho(level::hot, level::hot) = p1;
  rho(level::hot, level::cold) = rho10;
  rho(level::cold, level::hot) = std::conj(rho10);
  return rho;
}

double bose_occupation(double omega, double temperature) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw ValidationError("omega", "frequency must be positive");
  }
  if (!(temperature >= 0.0)) throw ValidationError("temperature", "must be non-negative");
  if (temperature == 0.0) return 0.0;
  return 1.0 / std::expm1(omega / temperature);
}

double coherence_denominator(const Occupations& o, const Couplings& r) {
  const double gc = r.gamma_c;
  const double gh = r.gamma_h;
  const double l2 = r.lambda * r.lambda;
  return l2 * ((1.0 + 3.0 * o.nh) * gh + (1.0 + 3.0 * o.nc) * gc) +
         gc * gh * (1.0 + 2.0 * o.nh + o.nc * (2.0 + 3.0 * o.nh)) *
             ((1.0 + o.nc) * gc + (1.0 + o.nh) * gh);
}

std::complex<double> coherence_closed_form(const Occupations& o, const Couplings& r) {
  const double num = r.lambda * (o.nh - o.nc) * r.gamma_c * r.gamma_h;
  return {0.0, num / coherence_denominator(o, r)};
}

SteadyState steady_state(const Occupations& o, const Couplings& r) {
  // Quad precision: with rates five decades apart and nc close to nh the
  // pivoted elimination loses ~1e5 * eps, which long double cannot absorb.
  using T = boost::multiprecision::cpp_bin_float_quad;
  std::array<T, 4> x{};
  if (!detail::solve_balance<T>(T(o.nc), T(o.nh), T(r.gamma_c), T(r.gamma_h), T(r.lambda), x)) {
    throw NumericalError("steady_state: singular balance equations");
  }
  return {x[0].convert_to<double>(), x[1].convert_to<double>(), x[2].convert_to<double>(),
          {0.0, x[3].convert_to<double>()}};
}

DensityMatrix apply_generator(const DensityMatrix& rho, const Occupations& o, const Couplings& r,
                              double level_energy) {
  return generator<double>(rho, o.nc, o.nh, r.gamma_c, r.gamma_h, r.lambda, level_energy);
}

DensityMatrix apply_hot_dissipator(const DensityMatrix& rho, double nh, double gamma_h) {
  return dissipator<double>(rho, level::hot, nh, gamma_h);
}

DensityMatrix apply_cold_dissipator(const DensityMatrix& rho, double nc, double gamma_c) {
  return dissipator<double>(rho, level::cold, nc, gamma_c);
}

Eigen::Matrix<double, 18, 18> generator_matrix(const Occupations& occ, const Couplings& rates,
                                               double level_energy) {
  return generator_matrix_t<double>(occ, rates, level_energy);
}

DensityMatrix liouvillian_steady_density(const Occupations& occ, const Couplings& rates,
                                         double level_energy) {
  // Extended precision: the kernel is recovered to ~1e-19 * cond instead of
  // ~1e-16 * cond, which matters when the rates span several decades.
  using T = long double;
  const Eigen::Matrix<T, 18, 18> l = generator_matrix_t<T>(occ, rates, level_energy);

  Eigen::ColPivHouseholderQR<Eigen::Matrix<T, 18, 18>> rank_qr(l);
  rank_qr.setThreshold(T(1e-14));
  if (rank_qr.rank() != 16) {
    throw NumericalError("liouvillian oracle: generator kernel has real dimension " +
                         std::to_string(18 - rank_qr.rank()) + ", expected 2");
  }

  // Kernel is {c * rho_ss : c complex}; pin c with Re tr = 1, Im tr = 0.
  Eigen::Matrix<T, 20, 18> aug = Eigen::Matrix<T, 20, 18>::Zero();
  aug.template topRows<18>() = l;
  for (int d = 0; d < 3; ++d) {
    aug(18, d * 3 + d) = T(1);
    aug(19, 9 + d * 3 + d) = T(1);
  }
  Eigen::Matrix<T, 20, 1> rhs = Eigen::Matrix<T, 20, 1>::Zero();
  rhs(18) = T(1);
  const Eigen::Matrix<T, 18, 1> v = aug.colPivHouseholderQr().solve(rhs);

  DensityMatrix rho;
  for (int c = 0; c < 9; ++c) {
    rho(c / 3, c % 3) = {static_cast<double>(v(c)), static_cast<double>(v(c + 9))};
  }
  return rho;
}

SteadyState liouvillian_steady_state_oracle(const Occupations& occ, const Couplings& rates,
                                            double level_energy) {
  const DensityMatrix rho = liouvillian_steady_density(occ, rates, level_energy);
  return {rho(level::g, level::g).real(), rho(level::cold, level::cold).real(),
          rho(level::hot, level::hot).real(), rho(level::hot, level::cold)};
}

}  // namespace qtr
