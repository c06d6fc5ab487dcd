// optimize.hpp: Deterministic derivative-free maximization and asymptotic-series
// coefficient extraction.

#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace qtr {

struct OptimizationResult {
  std::vector<double> argmax;
  double value{0.0};
  std::size_t evaluations{0};
  bool converged{false};
  double bracket_width{0.0};  // final golden-section interval or simplex diameter
};

struct ScalarOptions {
  std::size_t grid_points{256};
  std::size_t max_iterations{400};
};

/// Grid scan over [lo, hi] followed by golden-section refinement of the best
/// bracket down to width <= tol. Ties go to the smaller coordinate. Throws
/// NumericalError if the objective returns a non-finite value.
OptimizationResult maximize_scalar(const std::function<double(double)>& f, double lo, double hi,
                                   double tol, const ScalarOptions& options = {});

struct Box {
  std::array<double, 2> lo{};
  std::array<double, 2> hi{};
};

struct BoxOptions {
  std::size_t starts{16};
  std::size_t max_evaluations_per_start{20000};
  bool parallel{true};
};

/// Multi-start Nelder-Mead on -f, with trial points projected onto the box.
/// Starts are the first `starts` points of the (2, 3) Halton sequence; each start
/// restarts its simplex at the incumbent until the incumbent stops moving. The
/// best start wins; ties go to the lexicographically smaller coordinate.
OptimizationResult maximize_box(const std::function<double(double, double)>& f, const Box& box,
                                double tol, const BoxOptions& options = {});

enum class SeriesBasis {
  Laurent,      // a x + b + c / x
  SqrtLaurent,  // a sqrt(x) + b + c / sqrt(x)
};

struct SeriesFit {
  double a{0.0};
  double b{0.0};
  double c{0.0};
  double residual{0.0};   // relative error of the fitted series at the held-out point
  double condition{0.0};  // 2-norm condition number of the column-scaled design matrix
  bool ill_conditioned{false};
};

// The 1/x^2 term of the optimal-COP series shifts the fitted c by roughly
// d / x_min, so samples start at 1e4 to keep that below 1e-4.
inline constexpr std::array<double, 3> kDefaultSeriesSamples{1e4, 1e5, 1e6};
inline constexpr double kDefaultSeriesHeldOut = 1e7;
inline constexpr double kIllConditionedThreshold = 1e12;

SeriesFit fit_asymptotic_series(const std::function<double(double)>& g,
                                std::span<const double> samples = kDefaultSeriesSamples,
                                double held_out = kDefaultSeriesHeldOut,
                                SeriesBasis basis = SeriesBasis::Laurent);

}  // namespace qtr
