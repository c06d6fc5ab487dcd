#include "qtr/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Dense>

#include "qtr/errors.hpp"
#include "qtr/parallel.hpp"

namespace qtr {
namespace {

constexpr double kInvPhi = 0.6180339887498948482;  // (sqrt(5) - 1) / 2

class CountedScalar {
 public:
  explicit CountedScalar(const std::function<double(double)>& f) : f_(f) {}

  double operator()(double x) {
    ++count_;
    const double v = f_(x);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "maximize_scalar: objective is not finite at x = " << x;
      throw NumericalError(msg.str());
    }
    return v;
  }

  std::size_t count() const { return count_; }

 private:
  const std::function<double(double)>& f_;
  std::size_t count_{0};
};

struct Point {
  std::array<double, 2> x{};
  double cost{0.0};  // -f
};

bool better(const Point& a, const Point& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  return a.x < b.x;
}

double radical_inverse(std::size_t i, std::size_t base) {
  double inv = 1.0 / static_cast<double>(base);
  double scale = inv;
  double r = 0.0;
  while (i > 0) {
    r += static_cast<double>(i % base) * scale;
    i /= base;
    scale *= inv;
  }
  return r;
}

class NelderMead {
 public:
  NelderMead(const std::function<double(double, double)>& f, const Box& box, double tol,
             std::size_t budget)
      : f_(f), box_(box), tol_(tol), budget_(budget) {}

  OptimizationResult run(std::array<double, 2> start) {
    Point best = eval(clamp(start));
    double step_scale = 0.1;
    bool converged = false;
    double width = 0.0;
    // Restart at the incumbent until a restart no longer moves it by more than tol.
    for (int restart = 0; restart < 50 && evaluations_ < budget_; ++restart) {
      const Point before = best;
      const auto [b, w, ok] = descend(best, step_scale);
      best = b;
      width = w;
      converged = ok;
      const double moved = std::max(std::abs(best.x[0] - before.x[0]), std::abs(best.x[1] - before.x[1]));
      if (ok && restart > 0 && moved <= tol_) break;
      step_scale = std::max(step_scale * 0.1, 1e-6);
    }
    OptimizationResult r;
    r.argmax = {best.x[0], best.x[1]};
    r.value = -best.cost;
    r.evaluations = evaluations_;
    r.converged = converged && width <= tol_;
    r.bracket_width = width;
    return r;
  }

 private:
  struct Descent {
    Point best;
    double width;
    bool converged;
  };

  std::array<double, 2> clamp(std::array<double, 2> x) const {
    for (int k = 0; k < 2; ++k) x[k] = std::clamp(x[k], box_.lo[k], box_.hi[k]);
    return x;
  }

  Point eval(const std::array<double, 2>& x) {
    ++evaluations_;
    const double v = f_(x[0], x[1]);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "maximize_box: objective is not finite at (" << x[0] << ", " << x[1] << ")";
      throw NumericalError(msg.str());
    }
    return {x, -v};
  }

  static std::array<double, 2> affine(const std::array<double, 2>& c, const std::array<double, 2>& p,
                                      double t) {
    return {c[0] + t * (p[0] - c[0]), c[1] + t * (p[1] - c[1])};
  }

  static double diameter(const std::array<Point, 3>& s) {
    double d = 0.0;
    for (int i = 1; i < 3; ++i) {
      for (int k = 0; k < 2; ++k) d = std::max(d, std::abs(s[i].x[k] - s[0].x[k]));
    }
    return d;
  }

  Descent descend(const Point& start, double step_scale) {
    std::array<Point, 3> s;
    s[0] = start;
    for (int k = 0; k < 2; ++k) {
      const double range = box_.hi[k] - box_.lo[k];
      double step = step_scale * range;
      if (step < tol_) step = std::min(tol_, range);
      auto x = start.x;
      x[k] = (x[k] + step <= box_.hi[k]) ? x[k] + step : x[k] - step;
      s[k + 1] = eval(clamp(x));
    }

    while (evaluations_ < budget_) {
      std::sort(s.begin(), s.end(), better);
      const double width = diameter(s);
      if (width <= tol_) return {s[0], width, true};

      const std::array<double, 2> centroid{(s[0].x[0] + s[1].x[0]) / 2.0,
                                           (s[0].x[1] + s[1].x[1]) / 2.0};
      const Point reflected = eval(clamp(affine(centroid, s[2].x, -1.0)));
      if (better(reflected, s[0])) {
        const Point expanded = eval(clamp(affine(centroid, s[2].x, -2.0)));
        s[2] = better(expanded, reflected) ? expanded : reflected;
        continue;
      }
      if (better(reflected, s[1])) {
        s[2] = reflected;
        continue;
      }
      const bool outside = better(reflected, s[2]);
      const Point contracted =
          eval(clamp(affine(centroid, outside ? reflected.x : s[2].x, 0.5)));
      if (better(contracted, outside ? reflected : s[2])) {
        s[2] = contracted;
        continue;
      }
      for (int i = 1; i < 3; ++i) s[i] = eval(clamp(affine(s[0].x, s[i].x, 0.5)));
    }
    std::sort(s.begin(), s.end(), better);
    return {s[0], diameter(s), false};
  }

  const std::function<double(double, double)>& f_;
  Box box_;
  double tol_;
  std::size_t budget_;
  std::size_t evaluations_{0};
};

}  // namespace

OptimizationResult maximize_scalar(const std::function<double(double)>& f, double lo, double hi,
                                   double tol, const ScalarOptions& options) {
  if (!(lo < hi)) throw ValidationError("interval", "requires lo < hi");
  if (!(tol > 0.0)) throw ValidationError("tol", "must be positive");
  if (options.grid_points < 3) throw ValidationError("grid_points", "need at least 3 points");

  CountedScalar eval(f);
  const std::size_t n = options.grid_points;
  const double h = (hi - lo) / static_cast<double>(n - 1);
  auto grid_x = [&](std::size_t i) { return i + 1 == n ? hi : lo + h * static_cast<double>(i); };

  std::size_t best_i = 0;
  double best_v = eval(grid_x(0));
  for (std::size_t i = 1; i < n; ++i) {
    const double v = eval(grid_x(i));
    if (v > best_v) {
      best_v = v;
      best_i = i;
    }
  }

  double best_x = grid_x(best_i);
  double a = grid_x(best_i == 0 ? 0 : best_i - 1);
  double b = grid_x(std::min(best_i + 1, n - 1));

  auto consider = [&](double x, double v) {
    if (v > best_v || (v == best_v && x < best_x)) {
      best_v = v;
      best_x = x;
    }
  };

  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  std::size_t iter = 0;
  while (b - a > tol && iter < options.max_iterations) {
    if (fc >= fd) {  // tie keeps the left part
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = eval(d);
    }
    ++iter;
  }
  const double mid = 0.5 * (a + b);
  consider(c, fc);
  consider(d, fd);
  consider(mid, eval(mid));

  OptimizationResult r;
  r.argmax = {best_x};
  r.value = best_v;
  r.evaluations = eval.count();
  r.bracket_width = b - a;
  r.converged = r.bracket_width <= tol;
  return r;
}

OptimizationResult maximize_box(const std::function<double(double, double)>& f, const Box& box,
                                double tol, const BoxOptions& options) {
  for (int k = 0; k < 2; ++k) {
    if (!(box.lo[k] < box.hi[k])) throw ValidationError("box", "requires lo < hi in every coordinate");
  }
  if (!(tol > 0.0)) throw ValidationError("tol", "must be positive");
  if (options.starts == 0) throw ValidationError("starts", "need at least one start");

  auto run_start = [&](std::size_t i) {
    const double u = radical_inverse(i + 1, 2);
    const double v = radical_inverse(i + 1, 3);
    const std::array<double, 2> start{box.lo[0] + u * (box.hi[0] - box.lo[0]),
                                      box.lo[1] + v * (box.hi[1] - box.lo[1])};
    return NelderMead(f, box, tol, options.max_evaluations_per_start).run(start);
  };
  const std::vector<OptimizationResult> runs =
      options.parallel ? par::map(options.starts, run_start) : par::map_serial(options.starts, run_start);

  std::size_t best = 0;
  std::size_t total = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    total += runs[i].evaluations;
    const auto& r = runs[i];
    const auto& b = runs[best];
    if (r.value > b.value || (r.value == b.value && r.argmax < b.argmax)) best = i;
  }
  OptimizationResult out = runs[best];
  out.evaluations = total;
  return out;
}

SeriesFit fit_asymptotic_series(const std::function<double(double)>& g,
                                std::span<const double> samples, double held_out,
                                SeriesBasis basis) {
  if (samples.size() < 3) throw ValidationError("samples", "need at least 3 sample points");
  for (double x : samples) {
    if (!(x > 0.0) || !std::isfinite(x)) throw ValidationError("samples", "must be positive and finite");
  }

  auto row = [basis](double x) {
    const double t = basis == SeriesBasis::Laurent ? x : std::sqrt(x);
    return Eigen::RowVector3d(t, 1.0, 1.0 / t);
  };

  const auto m = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd a(m, 3);
  Eigen::VectorXd y(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    a.row(i) = row(samples[static_cast<std::size_t>(i)]);
    y(i) = g(samples[static_cast<std::size_t>(i)]);
  }
  const Eigen::Vector3d scale = a.colwise().norm().transpose();
  const Eigen::MatrixXd scaled = a * scale.cwiseInverse().asDiagonal();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(scaled, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double condition = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1)
                                                   : std::numeric_limits<double>::infinity();
  const Eigen::Vector3d coef = svd.solve(y).cwiseQuotient(scale);

  SeriesFit fit;
  fit.a = coef(0);
  fit.b = coef(1);
  fit.c = coef(2);
  fit.condition = condition;
  fit.ill_conditioned = !(condition < kIllConditionedThreshold);
  const double truth = g(held_out);
  const double model = row(held_out).dot(coef);
  fit.residual = std::abs(truth - model) / std::max(1.0, std::abs(truth));
  return fit;
}

}  // namespace qtr
