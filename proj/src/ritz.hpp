#pragma once

#include <vector>

#include "linalg.hpp"
#include "precision.hpp"

namespace heunspec::ritz {

// integral_0^inf xi^p e^{-xi^2} dxi = Gamma((p+1)/2)/2, p > -1.
// Every matrix element of the variational problem reduces to these.
Real moment(const Real& p);

// Variational basis u_j(xi) = xi^(|l|+j) e^{-xi^2/2}, j = 0..N-1, under the
// planar radial measure xi dxi.
struct BasisSpec {
  double l = 0.0;
  int N = 1;
  unsigned precision_digits = kDefaultDigits;
};

// Cache of the moments M(2|l| + t) needed to assemble N x N matrices.
// Integer 2|l| uses the exact half-integer Gamma recurrence
// M(p) = ((p-1)/2) M(p-2) from the seeds M(0) = sqrt(pi)/2, M(1) = 1/2;
// non-integer 2|l| falls back to direct Gamma evaluation. Instances are
// per-job; reads are const.
class MomentTable {
 public:
  MomentTable(double l, int n_basis);

  // M(2|l| + t); t = -1 is representable only when the stored offset makes
  // the power exceed -1 (the assembly code never asks otherwise).
  const Real& at_offset(int t) const;

 private:
  double two_s_int_ = -1;     // >= 0 when 2|l| is integral
  std::vector<Real> values_;  // index t+1
};

linalg::Matrix overlap_matrix(const BasisSpec& basis);
linalg::Matrix hamiltonian_matrix(const BasisSpec& basis, const Real& alpha);
linalg::Matrix inverse_xi_matrix(const BasisSpec& basis);

struct RitzResult {
  int N = 0;
  double l = 0.0;
  Real alpha;
  unsigned precision_digits = kDefaultDigits;
  std::vector<Real> eigenvalues;       // ascending
  linalg::Matrix vectors;              // basis coefficients, column per level
  std::vector<Real> residual_norms;    // relative, per pair
};

// Solves H c = W S c by Cholesky reduction of S followed by a cyclic Jacobi
// eigensolve. tolerance <= 0 selects the precision-derived default. Throws
// precision_error (with a digit suggestion) when S stops being numerically
// positive definite or a residual exceeds the tolerance.
RitzResult solve_generalized(const linalg::Matrix& h, const linalg::Matrix& s,
                             const Real& tolerance = Real(0));

// Assembles and solves the variational problem at the basis precision.
RitzResult solve(const BasisSpec& basis, const Real& alpha);

// Per-N results for N in n_values (ascending). Verifies the interlacing
// property: tracked eigenvalues never increase with N (within hu_slack);
// a violation is a precision fault and throws precision_error.
std::vector<RitzResult> convergence_study(double l, const Real& alpha,
                                          const std::vector<int>& n_values,
                                          int count,
                                          unsigned precision_digits,
                                          double hu_slack = 1e-30);

// <1/xi> in the selected eigenstate: (c^T X c)/(c^T S c), strictly positive.
Real expectation_inverse_xi(const RitzResult& result, int level);

}  // namespace heunspec::ritz
