// Runs every verification suite and prints one pass/fail line per acceptance
// criterion, with the worst check of each group. Exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "qtr/harness/verify.hpp"

using namespace qtr::harness;

namespace {

const std::map<int, std::string> kCriteria = {
    {1, "closed-form steady state matches the null-space oracle, 1000 draws, < 5 s"},
    {2, "first law on the oracle draws"},
    {3, "low-temperature 2-D optimum and the SSD COP"},
    {4, "strong coupling, optimum over wc stays in [zeta_YC, zeta_+], monotone in gamma"},
    {5, "strong coupling, optimum over wh stays in [2 zeta_C/3, zeta_YC], monotone in gamma"},
    {6, "weak-coupling bounds zeta_--, zeta_-, zeta_+, zeta_++ and the 2/3 guard"},
    {7, "series coefficients and the arithmetic progression of second terms"},
    {8, "cooling-power ratios in the zeta_C limits"},
    {9, "Omega-vs-chi crossover at zeta_C = 1"},
    {10, "interior maxima of the scaled cooling powers and the limit closed forms"},
};

// Normalized distance to failure: |measured - expected| / tolerance.
double margin(const Check& c) {
  if (!std::isfinite(c.measured)) return INFINITY;
  if (c.tolerance <= 0.0) return c.pass ? 0.0 : INFINITY;
  return std::abs(c.measured - c.expected) / c.tolerance;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  std::map<int, std::vector<Check>> groups;
  for (const auto& name : suite_names()) {
    for (auto& c : run_suite(name).checks) {
      if (c.criterion > 0) groups[c.criterion].push_back(std::move(c));
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  int failed = 0;
  for (const auto& [id, label] : kCriteria) {
    const auto& checks = groups[id];
    bool ok = !checks.empty();
    const Check* worst = nullptr;
    std::size_t bad = 0;
    for (const auto& c : checks) {
      if (!c.pass) {
        ok = false;
        ++bad;
      }
      if (worst == nullptr || (!c.pass && worst->pass) || (c.pass == worst->pass && margin(c) > margin(*worst))) {
        worst = &c;
      }
    }
    failed += ok ? 0 : 1;
    std::printf("criterion %2d: %s  %s (%zu checks, %zu failed", id, ok ? "PASS" : "FAIL", label.c_str(),
                checks.size(), bad);
    if (worst != nullptr) {
      std::printf("; tightest %s: measured %.6g, expected %.6g, tol %.3g", worst->id.c_str(), worst->measured,
                  worst->expected, worst->tolerance);
    }
    std::printf(")\n");
  }
  std::printf("total runtime %.2f s (%s under 60 s)\n", seconds, seconds < 60.0 ? "PASS" : "FAIL");
  return failed == 0 && seconds < 60.0 ? 0 : 1;
}
