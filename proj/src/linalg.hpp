#pragma once

#include <cstddef>
#include <vector>

#include "precision.hpp"

namespace heunspec::linalg {

// Dense square matrix of working-precision reals, row major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}

  std::size_t size() const { return n_; }
  Real& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Real& operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

 private:
  std::size_t n_ = 0;
  std::vector<Real> a_;
};

Real frobenius_norm(const Matrix& a);

struct CholeskyOutcome {
  bool ok = false;
  std::size_t column = 0;  // offending column when !ok
  Real pivot;              // its (non-positive) pivot value
};

// In-place lower-triangular Cholesky of a symmetric matrix (upper triangle
// is zeroed). Fails without throwing when a pivot is non-positive.
CholeskyOutcome cholesky_lower(Matrix& a);

// x <- L^-1 x and x <- L^-T x for the lower factor produced above.
void forward_substitute(const Matrix& l, std::vector<Real>& x);
void back_substitute_transposed(const Matrix& l, std::vector<Real>& x);

struct EigenDecomposition {
  std::vector<Real> values;  // ascending
  Matrix vectors;            // column k pairs with values[k], orthonormal
  unsigned sweeps = 0;
  Real off_norm;  // final off-diagonal Frobenius norm
};

// Cyclic Jacobi eigensolver for symmetric matrices. Rotates until the
// off-diagonal norm reaches the rounding floor of the current precision.
EigenDecomposition jacobi_eigen_symmetric(Matrix a, unsigned max_sweeps = 80);

}  // namespace heunspec::linalg
