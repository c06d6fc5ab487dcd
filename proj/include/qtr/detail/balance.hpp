// balance.hpp: Scalar-generic form of the reduced steady-state equations, so
// the same system can be solved in double, long double or multiprecision.

#pragma once

#include <array>

#include <Eigen/Dense>

namespace qtr::detail {

// Unknowns (pg, p0, p1, x) with rho10 = i x. Rows: d/dt rho11, d/dt rho00,
// Im d/dt rho10, trace. Re d/dt rho10 only involves Re rho10 and forces it to zero.
template <class T>
bool solve_balance(T nc, T nh, T gamma_c, T gamma_h, T lambda, std::array<T, 4>& out) {
  const T decay = gamma_h * (nh + T(1)) + gamma_c * (nc + T(1));
  Eigen::Matrix<T, 4, 4> a;
  a << T(2) * gamma_h * nh, T(0), T(-2) * gamma_h * (nh + T(1)), T(-2) * lambda,
      T(2) * gamma_c * nc, T(-2) * gamma_c * (nc + T(1)), T(0), T(2) * lambda,
      T(0), -lambda, lambda, -decay,
      T(1), T(1), T(1), T(0);
  Eigen::Matrix<T, 4, 1> b;
  b << T(0), T(0), T(0), T(1);
  for (int i = 0; i < 4; ++i) {
    const T scale = a.row(i).cwiseAbs().maxCoeff();
    a.row(i) /= scale;
    b(i) /= scale;
  }
  Eigen::FullPivLU<Eigen::Matrix<T, 4, 4>> lu(a);
  if (!lu.isInvertible()) return false;
  const Eigen::Matrix<T, 4, 1> x = lu.solve(b);
  out = {x(0), x(1), x(2), x(3)};
  return true;
}

}  // namespace qtr::detail
