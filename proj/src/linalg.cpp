#include "linalg.hpp"

#include <algorithm>
#include <numeric>

namespace heunspec::linalg {

Real frobenius_norm(const Matrix& a) {
  const std::size_t n = a.size();
  Real sum = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sum += a(i, j) * a(i, j);
  return sqrt(sum);
}

CholeskyOutcome cholesky_lower(Matrix& a) {
  const std::size_t n = a.size();
  Real sum;
  for (std::size_t j = 0; j < n; ++j) {
    sum = a(j, j);
    for (std::size_t k = 0; k < j; ++k) sum -= a(j, k) * a(j, k);
    if (sum <= 0) return {false, j, sum};
    const Real diag = sqrt(sum);
    a(j, j) = diag;
    for (std::size_t i = j + 1; i < n; ++i) {
      sum = a(i, j);
      for (std::size_t k = 0; k < j; ++k) sum -= a(i, k) * a(j, k);
      a(i, j) = sum / diag;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = 0;
  return {true, 0, Real(1)};
}

void forward_substitute(const Matrix& l, std::vector<Real>& x) {
  const std::size_t n = l.size();
  for (std::size_t i = 0; i < n; ++i) {
    Real sum = x[i];
    for (std::size_t k = 0; k < i; ++k) sum -= l(i, k) * x[k];
    x[i] = sum / l(i, i);
  }
}

void back_substitute_transposed(const Matrix& l, std::vector<Real>& x) {
  const std::size_t n = l.size();
  for (std::size_t ii = n; ii-- > 0;) {
    Real sum = x[ii];
    for (std::size_t k = ii + 1; k < n; ++k) sum -= l(k, ii) * x[k];
    x[ii] = sum / l(ii, ii);
  }
}

namespace {

Real off_diagonal_norm(const Matrix& a) {
  const std::size_t n = a.size();
  Real sum = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) sum += a(i, j) * a(i, j);
  return sqrt(2 * sum);
}

}  // namespace

EigenDecomposition jacobi_eigen_symmetric(Matrix a, unsigned max_sweeps) {
  const std::size_t n = a.size();
  Matrix v(n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1;

  EigenDecomposition out;
  if (n == 0) return out;

  const Real eps = pow(Real(10), -static_cast<int>(Real::default_precision()));
  const Real scale = frobenius_norm(a) + 1;
  Real tau, t, c, s, akp, akq;

  unsigned sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    const Real off = off_diagonal_norm(a);
    if (off <= eps * scale) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Real apq = a(p, q);
        // skip rotations already at the rounding floor
        if (abs(apq) <= eps * scale / (10 * Real(static_cast<unsigned>(n))))
          continue;
        tau = (a(q, q) - a(p, p)) / (2 * apq);
        if (tau >= 0)
          t = 1 / (tau + sqrt(1 + tau * tau));
        else
          t = -1 / (-tau + sqrt(1 + tau * tau));
        c = 1 / sqrt(1 + t * t);
        s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          akp = a(k, p);
          akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          akp = a(p, k);
          akq = a(q, k);
          a(p, k) = c * akp - s * akq;
          a(q, k) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          akp = v(k, p);
          akq = v(k, q);
          v(k, p) = c * akp - s * akq;
          v(k, q) = s * akp + c * akq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  out.values.resize(n);
  out.vectors = Matrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  out.sweeps = sweep;
  out.off_norm = off_diagonal_norm(a);
  return out;
}

}  // namespace heunspec::linalg
