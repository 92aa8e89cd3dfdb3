#include "ritz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace heunspec::ritz {

Real moment(const Real& p) {
  if (!(p > -1))
    throw std::invalid_argument("moment integral diverges for p <= -1");
  return tgamma((p + 1) / 2) / 2;
}

MomentTable::MomentTable(double l, int n_basis) {
  if (n_basis < 1) throw std::invalid_argument("basis size must be >= 1");
  const double two_s = 2 * std::abs(l);
  const int t_max = 2 * n_basis + 1;
  values_.resize(static_cast<std::size_t>(t_max) + 2);

  if (two_s == std::floor(two_s)) {
    two_s_int_ = two_s;
    const int base = static_cast<int>(two_s);
    // walk both parity chains of the exact recurrence M(p) = ((p-1)/2) M(p-2)
    Real even = sqrt(acos(Real(-1))) / 2;  // M(0) = sqrt(pi)/2
    Real odd = Real(1) / 2;                // M(1)
    for (int p = 0; p <= base + t_max; ++p) {
      Real& chain = (p % 2 == 0) ? even : odd;
      if (p >= 2) chain *= Real(p - 1) / 2;
      const int t = p - base;
      if (t >= -1 && t <= t_max)
        values_[static_cast<std::size_t>(t) + 1] = chain;
    }
  } else {
    for (int t = -1; t <= t_max; ++t) {
      const Real p = Real(two_s) + t;
      if (p <= -1) continue;  // never legally read
      values_[static_cast<std::size_t>(t) + 1] = moment(p);
    }
  }
}

const Real& MomentTable::at_offset(int t) const {
  if (t < -1 || static_cast<std::size_t>(t) + 1 >= values_.size())
    throw std::logic_error("moment offset out of cached range");
  return values_[static_cast<std::size_t>(t) + 1];
}

namespace {

void validate(const BasisSpec& basis) {
  if (basis.N < 1) throw std::invalid_argument("basis size must be >= 1");
  if (!std::isfinite(basis.l))
    throw std::invalid_argument("l must be finite");
  if (basis.precision_digits < 4)
    throw std::invalid_argument("precision must be at least 4 digits");
}

}  // namespace

linalg::Matrix overlap_matrix(const BasisSpec& basis) {
  validate(basis);
  const std::size_t n = static_cast<std::size_t>(basis.N);
  MomentTable tbl(basis.l, basis.N);
  linalg::Matrix s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      s(i, j) = tbl.at_offset(static_cast<int>(i + j) + 1);
      s(j, i) = s(i, j);
    }
  return s;
}

linalg::Matrix hamiltonian_matrix(const BasisSpec& basis, const Real& alpha) {
  validate(basis);
  const std::size_t n = static_cast<std::size_t>(basis.N);
  const Real s_abs = abs(Real(basis.l));
  const Real l2 = Real(basis.l) * Real(basis.l);
  MomentTable tbl(basis.l, basis.N);
  linalg::Matrix h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const int t = static_cast<int>(i + j);
      // (s+i)(s+j) + l^2 multiplies M(2s+i+j-1); when the coefficient is
      // exactly zero (l = 0, i = j = 0) the divergent moment is never read
      const Real kinetic_coef =
          (s_abs + static_cast<unsigned>(i)) * (s_abs + static_cast<unsigned>(j)) +
          l2;
      Real entry = 0;
      if (!kinetic_coef.is_zero()) entry += kinetic_coef * tbl.at_offset(t - 1);
      entry -= (2 * s_abs + static_cast<unsigned>(i + j)) * tbl.at_offset(t + 1);
      entry += 2 * tbl.at_offset(t + 3);
      entry -= alpha * tbl.at_offset(t);
      h(i, j) = entry;
      h(j, i) = entry;
    }
  return h;
}

linalg::Matrix inverse_xi_matrix(const BasisSpec& basis) {
  validate(basis);
  const std::size_t n = static_cast<std::size_t>(basis.N);
  MomentTable tbl(basis.l, basis.N);
  linalg::Matrix x(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      x(i, j) = tbl.at_offset(static_cast<int>(i + j));
      x(j, i) = x(i, j);
    }
  return x;
}

RitzResult solve_generalized(const linalg::Matrix& h, const linalg::Matrix& s,
                             const Real& tolerance) {
  const std::size_t n = h.size();
  if (n == 0 || s.size() != n)
    throw std::invalid_argument("matrix sizes disagree");
  const unsigned digits = Real::default_precision();
  const Real tol =
      tolerance > 0 ? tolerance
                    : pow(Real(10), -static_cast<int>(digits) + 20);

  linalg::Matrix chol = s;
  const auto outcome = linalg::cholesky_lower(chol);
  if (!outcome.ok) {
    // estimate how many digits the lost pivot would have needed
    Real max_diag = 0;
    for (std::size_t i = 0; i < n; ++i)
      max_diag = std::max(max_diag, Real(abs(s(i, i))));
    unsigned deficit = 10;
    if (outcome.pivot != 0) {
      const Real ratio = max_diag / abs(outcome.pivot);
      deficit = static_cast<unsigned>(
                    std::max(0.0, static_cast<double>(log10(ratio)))) +
                10;
    }
    throw precision_error(
        "overlap matrix lost positive definiteness at column " +
            std::to_string(outcome.column) + "; retry with at least " +
            std::to_string(digits + deficit) + " digits",
        digits + deficit);
  }

  // B = L^-1 H L^-T, assembled column by column through triangular solves
  linalg::Matrix b(n);
  std::vector<Real> col(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = h(i, j);
    linalg::forward_substitute(chol, col);
    for (std::size_t i = 0; i < n; ++i) b(i, j) = col[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) col[j] = b(i, j);
    linalg::forward_substitute(chol, col);
    for (std::size_t j = 0; j < n; ++j) b(i, j) = col[j];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Real sym = (b(i, j) + b(j, i)) / 2;
      b(i, j) = sym;
      b(j, i) = sym;
    }

  auto eig = linalg::jacobi_eigen_symmetric(std::move(b));

  RitzResult result;
  result.N = static_cast<int>(n);
  result.precision_digits = digits;
  result.eigenvalues = std::move(eig.values);
  result.vectors = linalg::Matrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) col[i] = eig.vectors(i, k);
    linalg::back_substitute_transposed(chol, col);
    for (std::size_t i = 0; i < n; ++i) result.vectors(i, k) = col[i];
  }

  // relative residuals ||H c - W S c|| / ((||H||_F + |W| ||S||_F) ||c||)
  const Real h_norm = linalg::frobenius_norm(h);
  const Real s_norm = linalg::frobenius_norm(s);
  result.residual_norms.resize(n);
  std::vector<Real> hc(n), sc(n);
  for (std::size_t k = 0; k < n; ++k) {
    Real res_sq = 0, c_sq = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Real hi = 0, si = 0;
      for (std::size_t j = 0; j < n; ++j) {
        hi += h(i, j) * result.vectors(j, k);
        si += s(i, j) * result.vectors(j, k);
      }
      const Real r = hi - result.eigenvalues[k] * si;
      res_sq += r * r;
      c_sq += result.vectors(i, k) * result.vectors(i, k);
    }
    const Real denom =
        (h_norm + abs(result.eigenvalues[k]) * s_norm) * sqrt(c_sq);
    result.residual_norms[k] = sqrt(res_sq) / denom;
    if (!(result.residual_norms[k] <= tol))
      throw precision_error(
          "eigenpair residual " +
              format_significant(result.residual_norms[k], 3) +
              " exceeds tolerance; retry with at least " +
              std::to_string(digits + 15) + " digits",
          digits + 15);
  }
  return result;
}

RitzResult solve(const BasisSpec& basis, const Real& alpha) {
  validate(basis);
  ScopedPrecision scope(basis.precision_digits);
  Real a = alpha;
  a.precision(static_cast<int>(basis.precision_digits));
  const auto h = hamiltonian_matrix(basis, a);
  const auto s = overlap_matrix(basis);
  RitzResult result = solve_generalized(h, s);
  result.l = basis.l;
  result.alpha = a;
  return result;
}

std::vector<RitzResult> convergence_study(double l, const Real& alpha,
                                          const std::vector<int>& n_values,
                                          int count,
                                          unsigned precision_digits,
                                          double hu_slack) {
  if (n_values.empty()) throw std::invalid_argument("empty N range");
  if (!std::is_sorted(n_values.begin(), n_values.end()))
    throw std::invalid_argument("N range must ascend");
  ScopedPrecision scope(precision_digits);
  const Real slack(hu_slack);

  std::vector<RitzResult> results;
  results.reserve(n_values.size());
  for (int n : n_values) {
    BasisSpec basis{l, n, precision_digits};
    results.push_back(solve(basis, alpha));
    if (results.size() > 1) {
      const RitzResult& prev = results[results.size() - 2];
      const RitzResult& cur = results.back();
      const int tracked = std::min(prev.N, count);
      for (int v = 0; v < tracked; ++v) {
        if (cur.eigenvalues[static_cast<std::size_t>(v)] >
            prev.eigenvalues[static_cast<std::size_t>(v)] + slack)
          throw precision_error(
              "variational eigenvalue " + std::to_string(v) +
                  " rose when the basis grew from N = " +
                  std::to_string(prev.N) + " to " + std::to_string(cur.N) +
                  "; this signals precision exhaustion, retry with at least " +
                  std::to_string(precision_digits + 15) + " digits",
              precision_digits + 15);
      }
    }
  }
  return results;
}

Real expectation_inverse_xi(const RitzResult& result, int level) {
  if (level < 0 || level >= result.N)
    throw std::out_of_range("level outside the solved spectrum");
  ScopedPrecision scope(result.precision_digits);
  BasisSpec basis{result.l, result.N, result.precision_digits};
  const auto x = inverse_xi_matrix(basis);
  const auto s = overlap_matrix(basis);
  const std::size_t n = static_cast<std::size_t>(result.N);
  const std::size_t k = static_cast<std::size_t>(level);
  Real num = 0, den = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      num += result.vectors(i, k) * x(i, j) * result.vectors(j, k);
      den += result.vectors(i, k) * s(i, j) * result.vectors(j, k);
    }
  return num / den;
}

}  // namespace heunspec::ritz
