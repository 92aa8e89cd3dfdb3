#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace heunspec::oracle {

namespace {

struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // size n-1
  double h = 0.0;
};

Tridiagonal assemble(double l, double alpha, double xi_max, int npoints) {
  const int n = npoints;
  const double h = xi_max / n;
  Tridiagonal t;
  t.h = h;
  t.diag.resize(static_cast<std::size_t>(n));
  t.off.resize(static_cast<std::size_t>(n) - 1);

  // flux form on cells [ih, (i+1)h]: A R = W B R with
  //   A_ii   = (xi_{i-1/2} + xi_{i+1/2})/h + V(xi_i) xi_i h
  //   A_ii+1 = -xi_{i+1/2}/h,   B_ii = xi_i h
  // symmetrized here as D^-1/2 A D^-1/2 with D = B.
  std::vector<double> mass(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double xi = (i + 0.5) * h;
    const double left = i * h;          // xi_{i-1/2}, zero flux when i = 0
    const double right = (i + 1) * h;   // xi_{i+1/2}; Dirichlet wall at i=n-1
    const double v = l * l / (xi * xi) - alpha / xi + xi * xi;
    mass[static_cast<std::size_t>(i)] = xi * h;
    t.diag[static_cast<std::size_t>(i)] = (left + right) / h + v * xi * h;
  }
  for (int i = 0; i + 1 < n; ++i) {
    const double right = (i + 1) * h;
    t.off[static_cast<std::size_t>(i)] = -right / h;
  }
  for (int i = 0; i < n; ++i)
    t.diag[static_cast<std::size_t>(i)] /= mass[static_cast<std::size_t>(i)];
  for (int i = 0; i + 1 < n; ++i)
    t.off[static_cast<std::size_t>(i)] /=
        std::sqrt(mass[static_cast<std::size_t>(i)] *
                  mass[static_cast<std::size_t>(i) + 1]);
  return t;
}

// number of eigenvalues of T strictly below x (Sturm count via LDL pivots)
int count_below(const Tridiagonal& t, double x) {
  const std::size_t n = t.diag.size();
  int count = 0;
  double q = t.diag[0] - x;
  if (q < 0) ++count;
  for (std::size_t i = 1; i < n; ++i) {
    const double e = t.off[i - 1];
    if (q == 0) q = -std::numeric_limits<double>::min();
    q = t.diag[i] - x - e * e / q;
    if (q < 0) ++count;
  }
  return count;
}

double bisect_level(const Tridiagonal& t, int level, double lo, double hi) {
  // invariant: count(lo) <= level < count(hi)
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_below(t, mid) <= level)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-12 * std::max(1.0, std::abs(mid))) break;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> lowest_eigenvalues(const Tridiagonal& t, int count) {
  double lo = t.diag[0], hi = t.diag[0];
  for (std::size_t i = 0; i < t.diag.size(); ++i) {
    const double left = i > 0 ? std::abs(t.off[i - 1]) : 0.0;
    const double right = i + 1 < t.diag.size() ? std::abs(t.off[i]) : 0.0;
    lo = std::min(lo, t.diag[i] - left - right);
    hi = std::max(hi, t.diag[i] + left + right);
  }
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k)
    values.push_back(bisect_level(t, k, lo, hi));
  return values;
}

// rough eigenvector by shifted inverse iteration (enough for the wall check)
std::vector<double> eigenvector(const Tridiagonal& t, double lambda,
                                int level) {
  const std::size_t n = t.diag.size();
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = std::sin((level + 1) * M_PI * static_cast<double>(i + 1) /
                    static_cast<double>(n + 1));
  const double shift = lambda + 1e-9 * std::max(1.0, std::abs(lambda));
  std::vector<double> dl(n), du(n), d(n), b(n);
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = t.diag[i] - shift;
      dl[i] = du[i] = i + 1 < n ? t.off[i] : 0.0;
      b[i] = v[i];
    }
    // Thomas with partial pivoting folded into a simple guard
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (d[i] == 0) d[i] = 1e-300;
      const double w = dl[i] / d[i];
      d[i + 1] -= w * du[i];
      b[i + 1] -= w * b[i];
    }
    if (d[n - 1] == 0) d[n - 1] = 1e-300;
    v[n - 1] = b[n - 1] / d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) v[i] = (b[i] - du[i] * v[i + 1]) / d[i];
    double norm = 0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
  }
  return v;
}

void check_wall(const Tridiagonal& t, const std::vector<double>& values,
                double xi_max) {
  // v is the symmetrized vector; |v_i|^2 already carries the measure weight
  const std::size_t n = t.diag.size();
  const std::size_t tail_start =
      static_cast<std::size_t>(std::floor(0.9 * static_cast<double>(n)));
  for (std::size_t k = 0; k < values.size(); ++k) {
    const auto v = eigenvector(t, values[k], static_cast<int>(k));
    double tail = 0;
    for (std::size_t i = tail_start; i < n; ++i) tail += v[i] * v[i];
    if (tail > 1e-8)
      throw check_error(
          "xi_max = " + std::to_string(xi_max) +
          " is too small: level " + std::to_string(k) +
          " keeps relative mass " + std::to_string(tail) +
          " beyond 0.9 xi_max");
  }
}

}  // namespace

std::vector<EigenEstimate> fd_spectrum(const model::ScaledModel& m,
                                       const GridSpec& grid, int count) {
  if (!(grid.xi_max > 0)) throw std::invalid_argument("xi_max must be > 0");
  if (grid.npoints < 16) throw std::invalid_argument("npoints too small");
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  if (count > grid.npoints / 10)
    throw std::invalid_argument(
        "count exceeds the resolution the grid can support");
  if (!std::isfinite(m.l)) throw std::invalid_argument("l must be finite");
  const double alpha = static_cast<double>(m.alpha);
  if (!std::isfinite(alpha)) throw std::invalid_argument("alpha must be finite");

  const auto coarse = assemble(m.l, alpha, grid.xi_max, grid.npoints);
  const auto coarse_vals = lowest_eigenvalues(coarse, count);
  check_wall(coarse, coarse_vals, grid.xi_max);

  std::vector<EigenEstimate> out(static_cast<std::size_t>(count));
  if (!grid.richardson) {
    for (int k = 0; k < count; ++k)
      out[static_cast<std::size_t>(k)].value =
          coarse_vals[static_cast<std::size_t>(k)];
    return out;
  }

  const auto fine = assemble(m.l, alpha, grid.xi_max, 2 * grid.npoints);
  const auto fine_vals = lowest_eigenvalues(fine, count);
  for (int k = 0; k < count; ++k) {
    const double a = coarse_vals[static_cast<std::size_t>(k)];
    const double b = fine_vals[static_cast<std::size_t>(k)];
    // second-order scheme: eliminate the h^2 term, keep |a-b| as the bar
    out[static_cast<std::size_t>(k)].value = (4 * b - a) / 3;
    out[static_cast<std::size_t>(k)].error_bar =
        std::max(std::abs(a - b), 1e-12);
  }
  return out;
}

}  // namespace heunspec::oracle
