#pragma once

#include <vector>

#include "model.hpp"
#include "precision.hpp"

namespace heunspec::frobenius {

// Recurrence data for the series R(xi) = xi^|l| e^{-xi^2/2} sum a_j xi^j:
//   a_{j+2} = -alpha a_{j+1}/((j+2)(j+1+theta)) - (g-2j) a_j/((j+2)(j+1+theta))
// with a_0 = 1, a_{-1} = 0, theta = 2|l|+1 >= 1 and g = W - 2 - 2|l|.
struct RecurrenceParams {
  double l = 0.0;
  Rational theta;  // 2|l| + 1, exact
  Real g;
};

RecurrenceParams make_recurrence_params(double l, const Real& w);

// Series coefficients a_0..a_J at numeric (l, g, alpha).
std::vector<Real> coefficients(double l, const Real& g, const Real& alpha,
                               int J);

// The closing coefficient a_{n+1} as an exact polynomial in alpha with g
// frozen at 2n. Degree is exactly n+1; only every other power appears.
struct CoefficientPolynomial {
  int n = 0;
  double l = 0.0;
  std::vector<Rational> coeffs;  // ascending powers of alpha
};

// n >= 1 (the polynomial families start there; n = 0 is rejected).
CoefficientPolynomial coefficient_polynomial(double l, int n);

// One (n, l) family: the fixed eigenvalue 2n + 2|l| + 2 and the n+1 real
// roots of a_{n+1}(alpha) = 0, ascending, refined to root_digits significant
// digits. The roots form a set symmetric under negation; 0 is a member
// exactly when n+1 is odd (detected from the constant term, not numerically).
struct TruncationSolution {
  int n = 0;
  double l = 0.0;
  unsigned root_digits = 40;
  Real w_fixed;
  std::vector<Real> alpha_roots;
  CoefficientPolynomial closing;
};

TruncationSolution truncation_solutions(double l, int n,
                                        unsigned root_digits = 40);

// xi^s e^{-xi^2/2} P(xi) with a polynomial factor P.
struct RadialWavefunction {
  double s = 0.0;          // |l|
  std::vector<Real> poly;  // P coefficients, ascending

  Real operator()(const Real& xi) const;
};

// Builds the exact polynomial wavefunction for the selected root
// (root_index is 1-based over the ascending roots). Verifies that the
// series genuinely closes there (a_{n+1} and a_{n+2} at the rounding floor).
RadialWavefunction polynomial_wavefunction(const TruncationSolution& sol,
                                           int root_index);

// Squared norm under the planar radial measure, integral_0^inf R^2 xi dxi
// (closed form via Gamma moments).
Real norm_squared(const RadialWavefunction& r);

// Max absolute residual of
//   R'' + R'/xi - l^2/xi^2 R + alpha/xi R - xi^2 R + W R
// over the grid (all points must be > 0), computed from the symbolic
// derivative of the polynomial-times-Gaussian form.
Real ode_residual(const RadialWavefunction& r, const Real& w,
                  const model::ScaledModel& m, const std::vector<Real>& grid);

}  // namespace heunspec::frobenius
