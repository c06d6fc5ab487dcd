#include "qtr/harness/oracle_batch.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "qtr/detail/balance.hpp"
#include "qtr/errors.hpp"
#include "qtr/parallel.hpp"
#include "qtr/thermodynamics.hpp"

namespace qtr::harness {
namespace {

// 53-bit uniform in [0, 1); spelled out so draws are identical across standard
// library implementations.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo * std::pow(hi / lo, unit(rng));
}

double rel_err(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

double rel_err(std::complex<double> a, std::complex<double> b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Deterministic Hermitian unit-trace probe built from the draw itself.
DensityMatrix probe_state(const OracleDraw& d) {
  using C = std::complex<double>;
  const double s = d.rates.gamma_c + d.rates.lambda;
  const C a(0.1 * s, 0.2);
  const C b(-0.3, 0.05);
  const C e(0.2, -0.4 / (1.0 + s));
  DensityMatrix m;
  m << 0.5, a, b,
       std::conj(a), 0.3, e,
       std::conj(b), std::conj(e), 0.2;
  return m;
}

// Heat released into the hot bath, -Tr(L_h[rho] H0), evaluated on a 50-digit
// steady state. In double the trace cancels: the gross exchange
// 2 gh (nh+1) p1 can exceed the net flux by 15 orders of magnitude.
double hot_flux_trace_route(const OracleDraw& d) {
  using H = boost::multiprecision::cpp_bin_float_50;
  std::array<H, 4> x;
  if (!detail::solve_balance<H>(H(d.occ.nc), H(d.occ.nh), H(d.rates.gamma_c), H(d.rates.gamma_h),
                                H(d.rates.lambda), x)) {
    throw NumericalError("first-law oracle: singular balance equations");
  }
  // H0 = diag(0, wc, wh); L_h only moves population between g and the hot level.
  const H nh(d.occ.nh);
  const H l_hot = H(2) * H(d.rates.gamma_h) * (nh * x[0] - (nh + H(1)) * x[2]);
  return static_cast<double>(-H(d.drive.wh) * l_hot);
}

}  // namespace

std::vector<OracleDraw> draw_oracle_parameters(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<OracleDraw> draws;
  draws.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    OracleDraw d;
    d.rates.gamma_c = log_uniform(rng, 1e-3, 1e3);
    d.rates.gamma_h = log_uniform(rng, 1e-3, 1e3);
    d.rates.lambda = log_uniform(rng, 1e-3, 1e3);
    d.occ.nc = 100.0 * unit(rng);
    d.occ.nh = 100.0 * unit(rng);
    d.drive.wc = log_uniform(rng, 1e-2, 1e2);
    d.drive.wh = d.drive.wc * (1.0 + log_uniform(rng, 1e-2, 1e2));
    d.drive.lambda = d.rates.lambda;
    draws.push_back(d);
  }
  return draws;
}

OracleComparison compare_with_oracle(const OracleDraw& d) {
  const SteadyState linear = steady_state(d.occ, d.rates);
  const std::complex<double> closed = coherence_closed_form(d.occ, d.rates);
  const double energy = 0.5 * (d.drive.wc + d.drive.wh);
  const DensityMatrix oracle = liouvillian_steady_density(d.occ, d.rates, energy);

  OracleComparison c;
  c.population_rel_err = std::max({rel_err(linear.pg, oracle(level::g, level::g).real()),
                                   rel_err(linear.p0, oracle(level::cold, level::cold).real()),
                                   rel_err(linear.p1, oracle(level::hot, level::hot).real())});
  c.rho10_rel_err = rel_err(closed, oracle(level::hot, level::cold));
  c.closed_vs_linear_rel_err = rel_err(closed, linear.rho10);
  c.g_coherence = std::max(std::abs(oracle(level::g, level::cold)), std::abs(oracle(level::g, level::hot)));
  c.re_rho10 = std::abs(oracle(level::hot, level::cold).real());
  c.hermiticity_defect = (oracle - oracle.adjoint()).cwiseAbs().maxCoeff();

  const SteadyState closed_state{linear.pg, linear.p0, linear.p1, closed};
  const double qh = hot_flux_trace_route(d);
  const double qc = cooling_power(closed_state, d.drive);
  const double p = input_power(closed_state, d.drive);
  c.first_law_rel_err = qh == 0.0 ? std::abs(qc + p) : std::abs(qh - qc - p) / std::abs(qh);

  const DensityMatrix image = apply_generator(probe_state(d), d.occ, d.rates, energy);
  c.trace_defect = std::abs(image.trace()) / std::max(1.0, image.cwiseAbs().maxCoeff());
  return c;
}

std::vector<OracleComparison> run_oracle_batch(const std::vector<OracleDraw>& draws) {
  return par::map(draws.size(), [&](std::size_t i) { return compare_with_oracle(draws[i]); });
}

std::vector<OracleComparison> run_oracle_batch_serial(const std::vector<OracleDraw>& draws) {
  return par::map_serial(draws.size(), [&](std::size_t i) { return compare_with_oracle(draws[i]); });
}

OracleSummary summarize(const std::vector<OracleComparison>& results) {
  OracleSummary s;
  s.draws = results.size();
  auto& w = s.worst;
  for (const auto& r : results) {
    w.population_rel_err = std::max(w.population_rel_err, r.population_rel_err);
    w.rho10_rel_err = std::max(w.rho10_rel_err, r.rho10_rel_err);
    w.closed_vs_linear_rel_err = std::max(w.closed_vs_linear_rel_err, r.closed_vs_linear_rel_err);
    w.first_law_rel_err = std::max(w.first_law_rel_err, r.first_law_rel_err);
    w.g_coherence = std::max(w.g_coherence, r.g_coherence);
    w.re_rho10 = std::max(w.re_rho10, r.re_rho10);
    w.hermiticity_defect = std::max(w.hermiticity_defect, r.hermiticity_defect);
    w.trace_defect = std::max(w.trace_defect, r.trace_defect);
  }
  return s;
}

}  // namespace qtr::harness
