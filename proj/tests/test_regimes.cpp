#include <array>
#include <cmath>

#include "doctest.h"
#include "qtr/errors.hpp"
#include "qtr/regimes.hpp"
#include "qtr/thermodynamics.hpp"

using namespace qtr;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Relative gap between the exact Omega and a regime form at three nested scales.
template <class Setup>
std::array<double, 3> nested(const std::array<double, 3>& scales, Setup setup) {
  std::array<double, 3> err{};
  for (std::size_t i = 0; i < 3; ++i) err[i] = setup(scales[i]);
  return err;
}

void check_shrinking(const std::array<double, 3>& err, double last_bound) {
  CHECK(err[1] < err[0]);
  CHECK(err[2] < err[1]);
  CHECK(err[2] <= last_bound);
}

}  // namespace

TEST_SUITE("regimes") {
  TEST_CASE("names round-trip") {
    for (Regime r : {Regime::Full, Regime::LowTemperature, Regime::HighTStrong, Regime::HighTWeak,
                     Regime::HighTWeakGammaInf, Regime::HighTWeakGamma0}) {
      CHECK(parse_regime(to_string(r)) == r);
    }
    CHECK_THROWS_AS(parse_regime("medium_t"), ValidationError);
  }

  TEST_CASE("low-temperature form is the w/T -> infinity limit") {
    // w/T = x with wc = 1, wh = 2.5, Th = 2 Tc
    const auto err = nested({5.0, 10.0, 20.0}, [](double x) {
      const BathSpec bath = BathSpec::make(1.0 / x, 2.0 / x, 1.0, 2.0);
      const DriveSpec d = DriveSpec::make(1.0, 2.5, 0.8);
      return rel(regime_omega(Regime::Full, bath, d), omega_low_temperature(1.0, 2.5, bath, 0.8));
    });
    check_shrinking(err, 1e-7);
  }

  TEST_CASE("strong-coupling form is the w/T -> 0, lambda >> Gamma n limit") {
    // w/T <= eps; the neglected terms scale as eps and (Gamma n / lambda)^2
    const auto err = nested({1e-2, 1e-3, 1e-4}, [](double eps) {
      const BathSpec bath = BathSpec::make(1.0 / eps, 2.0 / eps, 1.0, 3.0);
      const DriveSpec d = DriveSpec::make(0.7, 2.0, 1e8);
      return rel(regime_omega(Regime::Full, bath, d), omega_high_t_strong(0.7, 2.0, bath));
    });
    check_shrinking(err, 1e-3);
  }

  TEST_CASE("strong coupling needs lambda large against Gamma n, not just Gamma") {
    const double eps = 1e-3;
    const BathSpec bath = BathSpec::make(1.0 / eps, 2.0 / eps, 1.0, 1.0);
    auto gap = [&](double lambda) {
      const DriveSpec d = DriveSpec::make(0.7, 2.0, lambda);
      return rel(regime_omega(Regime::Full, bath, d), omega_high_t_strong(0.7, 2.0, bath));
    };
    CHECK(gap(1e3) > 0.5);   // lambda / Gamma = 1e3 with n ~ 1e3: far from the limit
    CHECK(gap(1e6) < 5e-3);  // lambda >> Gamma n
  }

  TEST_CASE("strong-coupling cooling power carries the wc factor") {
    const double eps = 1e-4;
    const BathSpec bath = BathSpec::make(1.0 / eps, 2.0 / eps, 1.0, 3.0);
    const DriveSpec d = DriveSpec::make(0.7, 2.0, 1e8);
    CHECK(rel(regime_cooling_power(Regime::Full, bath, d), cooling_high_t_strong(0.7, 2.0, bath)) < 1e-3);
    CHECK(cooling_high_t_strong(0.7, 2.0, bath) ==
          doctest::Approx(0.7 * regime_cycle_flux(Regime::HighTStrong, bath, d)).epsilon(1e-15));
  }

  TEST_CASE("weak-coupling form is the w/T -> 0, lambda << Gamma n limit") {
    const auto err = nested({1e-2, 1e-3, 1e-4}, [](double eps) {
      const BathSpec bath = BathSpec::make(1.0 / eps, 2.0 / eps, 0.5, 2.0);
      const DriveSpec d = DriveSpec::make(0.7, 2.0, 1e-6);
      return rel(regime_omega(Regime::Full, bath, d), omega_high_t_weak(0.7, 2.0, bath, 1e-6, Regime::HighTWeak));
    });
    check_shrinking(err, 1e-3);
  }

  TEST_CASE("weak-coupling gamma limits") {
    const auto to_inf = nested({1e3, 1e6, 1e9}, [](double gamma) {
      const BathSpec bath = BathSpec::make(1.0, 2.0, 1.0, gamma);
      return rel(omega_high_t_weak(0.7, 2.0, bath, 1e-3, Regime::HighTWeakGammaInf),
                 omega_high_t_weak(0.7, 2.0, bath, 1e-3, Regime::HighTWeak));
    });
    check_shrinking(to_inf, 1e-8);
    const auto to_zero = nested({1e-3, 1e-6, 1e-9}, [](double gamma) {
      const BathSpec bath = BathSpec::make(1.0, 2.0, 1.0, gamma);
      return rel(omega_high_t_weak(0.7, 2.0, bath, 1e-3, Regime::HighTWeakGamma0),
                 omega_high_t_weak(0.7, 2.0, bath, 1e-3, Regime::HighTWeak));
    });
    check_shrinking(to_zero, 1e-8);
    CHECK_THROWS_AS(omega_high_t_weak(0.7, 2.0, BathSpec::make(1.0, 2.0, 1.0, 1.0), 1.0, Regime::Full),
                    ValidationError);
  }

  TEST_CASE("strong-coupling objective is homogeneous of degree one") {
    const BathSpec bath = BathSpec::make(0.5, 1.0, 1.0, 2.0);
    for (double s : {0.25, 3.0, 1e4}) {
      CHECK(omega_high_t_strong(0.3 * s, 0.8 * s, bath) ==
            doctest::Approx(s * omega_high_t_strong(0.3, 0.8, bath)).epsilon(1e-14));
    }
  }

  TEST_CASE("chi is COP times cooling power in every regime") {
    const BathSpec bath = BathSpec::make(1.0, 2.0, 1.0, 1.0);
    const DriveSpec d = DriveSpec::make(0.7, 2.0, 1.0);
    for (Regime r : {Regime::Full, Regime::LowTemperature, Regime::HighTStrong, Regime::HighTWeak}) {
      CHECK(regime_chi(r, bath, d) == doctest::Approx(cop(d) * regime_cooling_power(r, bath, d)).epsilon(1e-15));
    }
  }
}
