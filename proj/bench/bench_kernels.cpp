// Serial reference vs OpenMP timings for the data-parallel kernels: the oracle
// batch, an inner-optimized gamma scan and the multi-start box search. Each
// pair must also agree bit for bit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <vector>

#include "qtr/harness/oracle_batch.hpp"
#include "qtr/optimize.hpp"
#include "qtr/parallel.hpp"
#include "qtr/regimes.hpp"

namespace {

using namespace qtr;

template <class F>
double seconds(F&& f, int repeats) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void report(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s serial %9.4f s   parallel %9.4f s   speedup %5.2fx   %s\n", name, serial, parallel,
              serial / parallel, same ? "identical" : "MISMATCH");
}

double scan_point(double gamma) {
  const BathSpec bath = BathSpec::make(0.5, 1.0, 1.0, gamma);
  const auto r = maximize_scalar([&](double wc) { return omega_high_t_strong(wc, 1.0, bath); }, 1e-9,
                                 1.0 - 1e-9, 1e-12);
  return r.argmax[0];
}

}  // namespace

int main() {
  std::printf("threads: %d\n", par::max_threads());

  const auto draws = harness::draw_oracle_parameters(harness::kDefaultSeed, 4000);
  std::vector<harness::OracleComparison> a, b;
  const double os = seconds([&] { a = harness::run_oracle_batch_serial(draws); }, 3);
  const double op = seconds([&] { b = harness::run_oracle_batch(draws); }, 3);
  bool same = a.size() == b.size();
  for (std::size_t i = 0; same && i < a.size(); ++i) {
    same = a[i].rho10_rel_err == b[i].rho10_rel_err && a[i].first_law_rel_err == b[i].first_law_rel_err;
  }
  report("oracle batch (4000 draws)", os, op, same);

  std::vector<double> gammas(2000);
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    gammas[i] = std::pow(10.0, -6.0 + 12.0 * static_cast<double>(i) / static_cast<double>(gammas.size() - 1));
  }
  std::vector<double> sa, sb;
  const auto point = [&](std::size_t i) { return scan_point(gammas[i]); };
  const double ss = seconds([&] { sa = par::map_serial(gammas.size(), point); }, 3);
  const double sp = seconds([&] { sb = par::map(gammas.size(), point); }, 3);
  report("gamma scan (2000 points)", ss, sp, sa == sb);

  const BathSpec low = BathSpec::make(1.0, 2.0, 1.0, 1.0);
  Box box;
  box.lo = {1e-3, 1e-3};
  box.hi = {10.0, 40.0};
  const auto f = [&](double wc, double wh) { return omega_low_temperature(wc, wh, low, 1.0); };
  BoxOptions serial_opt;
  serial_opt.starts = 64;
  serial_opt.parallel = false;
  BoxOptions parallel_opt = serial_opt;
  parallel_opt.parallel = true;
  OptimizationResult ma, mb;
  const double ms = seconds([&] { ma = maximize_box(f, box, 1e-10, serial_opt); }, 3);
  const double mp = seconds([&] { mb = maximize_box(f, box, 1e-10, parallel_opt); }, 3);
  report("multi-start (64 starts)", ms, mp, ma.argmax == mb.argmax && ma.value == mb.value);
  return 0;
}
