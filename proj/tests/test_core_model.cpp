#include <cmath>
#include <complex>

#include "doctest.h"
#include "qtr/core_model.hpp"
#include "qtr/errors.hpp"
#include "qtr/harness/oracle_batch.hpp"

using namespace qtr;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

std::string field_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.field();
  }
  return "";
}

}  // namespace

TEST_SUITE("core_model") {
  TEST_CASE("bose occupation") {
    CHECK(bose_occupation(1.0, 1.0) == doctest::Approx(1.0 / (std::exp(1.0) - 1.0)).epsilon(1e-15));
    CHECK(bose_occupation(2.0, 0.0) == 0.0);
    // high temperature: n = T/w - 1/2 + w/(12 T)
    const double n = bose_occupation(1e-3, 1.0);
    CHECK(std::abs(n - (1e3 - 0.5 + 1e-3 / 12.0)) < 1e-9);
    CHECK_THROWS_AS(bose_occupation(0.0, 1.0), ValidationError);
    CHECK_THROWS_AS(bose_occupation(1.0, -1.0), ValidationError);
  }

  TEST_CASE("parameter validation names the field") {
    CHECK(field_of([] { BathSpec::make(2.0, 1.0, 1.0, 1.0); }) == "th");
    CHECK(field_of([] { BathSpec::make(1.0, 2.0, 0.0, 1.0); }) == "gc");
    CHECK(field_of([] { BathSpec::make(1.0, 2.0, 1.0, 1e13); }) == "gh");
    CHECK(field_of([] { BathSpec::make(-1.0, 2.0, 1.0, 1.0); }) == "tc");
    CHECK(field_of([] { DriveSpec::make(2.0, 1.0, 1.0); }) == "wh");
    CHECK(field_of([] { DriveSpec::make(1.0, 2.0, std::nan("")); }) == "lambda");
    CHECK(field_of([] { Occupations::make(-0.1, 1.0); }) == "nc");
    CHECK_NOTHROW(BathSpec::make(kMinParameter, kMaxParameter, 1.0, 1.0));
  }

  TEST_CASE("worked example: nc = 1, nh = 1/2, unit rates") {
    const Occupations occ{1.0, 0.5};
    const Couplings unit{1.0, 1.0, 1.0};
    CHECK(coherence_denominator(occ, unit) == doctest::Approx(25.75).epsilon(1e-15));
    // rho10 = i * (-1/2) / 25.75 = -2i/103
    CHECK(coherence_closed_form(occ, unit).imag() == doctest::Approx(-2.0 / 103.0).epsilon(1e-15));
    const SteadyState ss = steady_state(occ, unit);
    CHECK(ss.rho10.imag() == doctest::Approx(-2.0 / 103.0).epsilon(1e-15));
    CHECK(ss.rho10.real() == 0.0);
    CHECK(ss.pg == doctest::Approx(56.0 / 103.0).epsilon(1e-14));
    CHECK(ss.p0 == doctest::Approx(27.0 / 103.0).epsilon(1e-14));
    CHECK(ss.p1 == doctest::Approx(20.0 / 103.0).epsilon(1e-14));
  }

  TEST_CASE("steady state is a density matrix annihilated by the generator") {
    for (const auto& d : harness::draw_oracle_parameters(7, 200)) {
      const SteadyState ss = steady_state(d.occ, d.rates);
      CHECK(std::abs(ss.pg + ss.p0 + ss.p1 - 1.0) <= 1e-12);
      CHECK(ss.pg >= 0.0);
      CHECK(ss.p0 >= 0.0);
      CHECK(ss.p1 >= 0.0);
      // |rho10|^2 <= p0 p1 (positivity of the 2x2 block)
      CHECK(std::norm(ss.rho10) <= ss.p0 * ss.p1 * (1.0 + 1e-12));
      const DensityMatrix rho = ss.density();
      const DensityMatrix flow = apply_generator(rho, d.occ, d.rates, 0.5 * (d.drive.wc + d.drive.wh));
      const double scale = std::max({d.rates.gamma_c * (d.occ.nc + 1.0), d.rates.gamma_h * (d.occ.nh + 1.0),
                                     d.rates.lambda});
      CHECK(flow.cwiseAbs().maxCoeff() <= 1e-12 * scale);
    }
  }

  TEST_CASE("closed form, linear solve and null-space oracle agree") {
    for (const auto& d : harness::draw_oracle_parameters(11, 300)) {
      const auto closed = coherence_closed_form(d.occ, d.rates);
      const SteadyState lin = steady_state(d.occ, d.rates);
      const SteadyState orc = liouvillian_steady_state_oracle(d.occ, d.rates);
      CHECK(rel(closed.imag(), lin.rho10.imag()) <= 1e-12);
      CHECK(rel(closed.imag(), orc.rho10.imag()) <= 1e-9);
      CHECK(rel(lin.pg, orc.pg) <= 1e-9);
      CHECK(rel(lin.p0, orc.p0) <= 1e-9);
      CHECK(rel(lin.p1, orc.p1) <= 1e-9);
    }
  }

  TEST_CASE("generator kernel is a single complex line") {
    const Occupations occ{0.7, 0.2};
    const Couplings r{0.3, 2.0, 1.5};
    const Eigen::Matrix<double, 18, 18> m = generator_matrix(occ, r, 1.2);
    Eigen::FullPivLU<Eigen::Matrix<double, 18, 18>> lu(m);
    lu.setThreshold(1e-12);
    CHECK(lu.rank() == 16);
  }

  TEST_CASE("the common rotating-frame energy drops out of the steady state") {
    const Occupations occ{3.0, 1.0};
    const Couplings r{0.1, 4.0, 0.8};
    const DensityMatrix a = liouvillian_steady_density(occ, r, 0.0);
    const DensityMatrix b = liouvillian_steady_density(occ, r, 7.5);
    CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-13);
    CHECK(std::abs(a(level::g, level::cold)) <= 1e-15);
    CHECK(std::abs(a(level::g, level::hot)) <= 1e-15);
  }

  TEST_CASE("generator preserves trace and hermiticity") {
    DensityMatrix s;
    s << 0.4, std::complex<double>(0.1, 0.2), std::complex<double>(-0.05, 0.0),
        std::complex<double>(0.1, -0.2), 0.35, std::complex<double>(0.0, 0.1),
        std::complex<double>(-0.05, 0.0), std::complex<double>(0.0, -0.1), 0.25;
    const DensityMatrix out = apply_generator(s, {2.0, 0.5}, {1.0, 3.0, 0.7}, 1.3);
    CHECK(std::abs(out.trace()) <= 1e-15);
    CHECK((out - out.adjoint()).cwiseAbs().maxCoeff() <= 1e-15);
  }

  TEST_CASE("coherence sign follows the occupation difference") {
    const Couplings r{1.0, 2.0, 0.5};
    CHECK(coherence_closed_form({2.0, 1.0}, r).imag() < 0.0);  // refrigerating
    CHECK(coherence_closed_form({1.0, 2.0}, r).imag() > 0.0);
    CHECK(coherence_closed_form({1.5, 1.5}, r).imag() == 0.0);
  }
}
