#include "frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "errors.hpp"
#include "ritz.hpp"

namespace heunspec::frobenius {

namespace {

using Poly = std::vector<Rational>;  // ascending coefficients

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Rational eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t k = 1; k < p.size(); ++k)
    d.push_back(Rational(static_cast<unsigned>(k)) * p[k]);
  return d;
}

// remainder of u by v (v nonzero), standard long division over Q
Poly remainder(Poly u, const Poly& v) {
  trim(u);
  const int dv = degree(v);
  while (degree(u) >= dv && !u.empty()) {
    const Rational factor = u.back() / v.back();
    const std::size_t shift = u.size() - v.size();
    for (std::size_t k = 0; k < v.size(); ++k) u[shift + k] -= factor * v[k];
    u.pop_back();
    trim(u);
  }
  return u;
}

Poly monic(Poly p) {
  trim(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly gcd(Poly a, Poly b) {
  a = monic(std::move(a));
  b = monic(std::move(b));
  while (!b.empty()) {
    Poly r = monic(remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// quotient of u by v assuming exact division
Poly quotient(Poly u, const Poly& v) {
  trim(u);
  Poly q(u.size() >= v.size() ? u.size() - v.size() + 1 : 0, Rational(0));
  const int dv = degree(v);
  while (degree(u) >= dv && !u.empty()) {
    const Rational factor = u.back() / v.back();
    const std::size_t shift = u.size() - v.size();
    q[shift] = factor;
    for (std::size_t k = 0; k < v.size(); ++k) u[shift + k] -= factor * v[k];
    u.pop_back();
    trim(u);
  }
  return q;
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p);
  chain.push_back(derivative(p));
  while (degree(chain.back()) > 0) {
    Poly r = remainder(chain[chain.size() - 2], chain.back());
    trim(r);
    if (r.empty()) break;  // should not happen for square-free input
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const Poly& p : chain) {
    const int s = sign_of(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

Rational cauchy_bound(const Poly& p) {
  Rational bound = 0;
  const Rational lead = abs(p.back());
  for (std::size_t k = 0; k + 1 < p.size(); ++k)
    bound = std::max(bound, Rational(abs(p[k]) / lead));
  return bound + 1;
}

struct Interval {
  Rational lo, hi;  // exactly one root in (lo, hi]
};

void isolate(const std::vector<Poly>& chain, const Rational& lo,
             const Rational& hi, int nroots, std::vector<Interval>& out) {
  if (nroots == 0) return;
  if (nroots == 1) {
    out.push_back({lo, hi});
    return;
  }
  const Rational mid = (lo + hi) / 2;
  const int left = sign_variations(chain, lo) - sign_variations(chain, mid);
  isolate(chain, lo, mid, left, out);
  isolate(chain, mid, hi, nroots - left, out);
}

// Bisection to `digits` significant digits with exact sign evaluation.
Real refine_root(const Poly& p, Rational lo, Rational hi, unsigned digits) {
  Rational flo = eval(p, lo);
  Rational fhi = eval(p, hi);
  if (fhi == 0) {
    ScopedPrecision scope(digits + 10);
    return to_real(hi);
  }
  if (sign_of(flo) == sign_of(fhi))
    throw check_error("root interval lost its sign change");
  // stop once the interval width clears the requested significant digits
  const Rational scale =
      std::max(Rational(1), std::max(Rational(abs(lo)), Rational(abs(hi))));
  Rational tol = scale;
  for (unsigned k = 0; k < digits + 3; ++k) tol /= 10;
  while (hi - lo > tol) {
    const Rational mid = (lo + hi) / 2;
    const Rational fmid = eval(p, mid);
    if (fmid == 0) {
      ScopedPrecision scope(digits + 10);
      return to_real(mid);
    }
    if (sign_of(fmid) == sign_of(flo)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  ScopedPrecision scope(digits + 10);
  return to_real(Rational((lo + hi) / 2));
}

Rational rational_abs_of(double l) {
  return abs(Rational(l));  // doubles are dyadic rationals, conversion exact
}

void require_order(int n) {
  if (n < 1)
    throw std::invalid_argument(
        "truncation order n must be >= 1 (the polynomial families start at "
        "n = 1)");
}

}  // namespace

RecurrenceParams make_recurrence_params(double l, const Real& w) {
  if (!std::isfinite(l)) throw std::invalid_argument("l must be finite");
  RecurrenceParams rp;
  rp.l = l;
  rp.theta = 2 * rational_abs_of(l) + 1;
  rp.g = w - 2 - 2 * abs(Real(l));
  return rp;
}

std::vector<Real> coefficients(double l, const Real& g, const Real& alpha,
                               int J) {
  if (J < 0) throw std::invalid_argument("J must be >= 0");
  if (!std::isfinite(l)) throw std::invalid_argument("l must be finite");
  const Real theta = 2 * abs(Real(l)) + 1;
  std::vector<Real> a(static_cast<std::size_t>(J) + 1);
  a[0] = 1;
  Real prev = 0;  // a_{-1}
  for (int j = -1; j + 2 <= J; ++j) {
    const Real den = Real(j + 2) * (j + 1 + theta);
    const Real& aj1 = a[static_cast<std::size_t>(j + 1)];
    const Real& aj = (j < 0) ? prev : a[static_cast<std::size_t>(j)];
    a[static_cast<std::size_t>(j + 2)] =
        -alpha * aj1 / den - (g - 2 * j) * aj / den;
  }
  return a;
}

CoefficientPolynomial coefficient_polynomial(double l, int n) {
  require_order(n);
  if (!std::isfinite(l)) throw std::invalid_argument("l must be finite");
  const Rational theta = 2 * rational_abs_of(l) + 1;
  const Rational g = 2 * n;

  // carry each a_j as an exact polynomial in alpha
  Poly prev;                      // a_{-1} = 0
  Poly cur = {Rational(1)};       // a_0 = 1
  for (int j = -1; j <= n - 1; ++j) {
    const Rational den = Rational(j + 2) * (Rational(j + 1) + theta);
    Poly next(cur.size() + 1, Rational(0));
    for (std::size_t k = 0; k < cur.size(); ++k)
      next[k + 1] -= cur[k] / den;  // -alpha a_{j+1} / den
    const Rational cg = (g - 2 * j) / den;
    for (std::size_t k = 0; k < prev.size(); ++k) next[k] -= cg * prev[k];
    prev = std::move(cur);
    cur = std::move(next);
  }

  CoefficientPolynomial out;
  out.n = n;
  out.l = l;
  out.coeffs = std::move(cur);
  if (degree(out.coeffs) != n + 1)
    throw check_error("closing polynomial has unexpected degree");
  return out;
}

TruncationSolution truncation_solutions(double l, int n,
                                        unsigned root_digits) {
  require_order(n);
  if (root_digits == 0) root_digits = 40;

  TruncationSolution sol;
  sol.n = n;
  sol.l = l;
  sol.root_digits = root_digits;
  sol.closing = coefficient_polynomial(l, n);
  {
    ScopedPrecision scope(root_digits + 10);
    sol.w_fixed = 2 * n + 2 * abs(Real(l)) + 2;
  }

  // factor out the exact zero root (present iff n+1 is odd, by parity)
  Poly p = sol.closing.coeffs;
  int zero_multiplicity = 0;
  while (!p.empty() && p.front() == 0) {
    p.erase(p.begin());
    ++zero_multiplicity;
  }
  if (zero_multiplicity != ((n + 1) % 2))
    throw check_error("zero-root multiplicity contradicts parity");

  // remaining roots must be simple: the closing polynomial is the
  // characteristic polynomial of a symmetrizable tridiagonal matrix
  if (degree(gcd(p, derivative(p))) > 0)
    throw check_error("unexpected multiple root in closing polynomial");

  const auto chain = sturm_chain(p);
  const Rational bound = cauchy_bound(p);
  const int nreal =
      sign_variations(chain, -bound) - sign_variations(chain, bound);
  if (nreal != degree(p))
    throw check_error(
        "closing polynomial has non-real roots, contradicting the realness "
        "guarantee");

  std::vector<Interval> intervals;
  isolate(chain, -bound, bound, nreal, intervals);
  std::vector<Real> roots;
  {
    for (const Interval& iv : intervals)
      roots.push_back(refine_root(p, iv.lo, iv.hi, root_digits));
  }
  if (zero_multiplicity == 1) {
    ScopedPrecision scope(root_digits + 10);
    roots.push_back(Real(0));
  }
  std::sort(roots.begin(), roots.end());
  if (static_cast<int>(roots.size()) != n + 1)
    throw check_error("root count does not equal n + 1");
  sol.alpha_roots = std::move(roots);
  return sol;
}

Real RadialWavefunction::operator()(const Real& xi) const {
  Real acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * xi + *it;
  if (xi.is_zero())
    return s == 0 ? acc : Real(0);
  return acc * pow(xi, Real(s)) * exp(-xi * xi / 2);
}

RadialWavefunction polynomial_wavefunction(const TruncationSolution& sol,
                                           int root_index) {
  if (root_index < 1 || root_index > sol.n + 1)
    throw std::out_of_range("root_index must lie in 1..n+1");
  ScopedPrecision scope(sol.root_digits + 10);
  const Real& alpha = sol.alpha_roots[static_cast<std::size_t>(root_index - 1)];
  const Real g = Real(2 * sol.n);
  std::vector<Real> a = coefficients(sol.l, g, alpha, sol.n + 2);

  Real scale = 0;
  for (int j = 0; j <= sol.n; ++j) scale = std::max(scale, Real(abs(a[j])));
  const Real floor_tol =
      scale * pow(Real(10), -static_cast<int>(sol.root_digits) + 5);
  if (abs(a[static_cast<std::size_t>(sol.n + 1)]) > floor_tol ||
      abs(a[static_cast<std::size_t>(sol.n + 2)]) > floor_tol)
    throw check_error("series does not close at the selected root");

  RadialWavefunction r;
  r.s = std::abs(sol.l);
  r.poly.assign(a.begin(), a.begin() + sol.n + 1);
  return r;
}

Real norm_squared(const RadialWavefunction& r) {
  const Real two_s = 2 * Real(r.s);
  Real sum = 0;
  for (std::size_t j = 0; j < r.poly.size(); ++j)
    for (std::size_t k = 0; k < r.poly.size(); ++k)
      sum += r.poly[j] * r.poly[k] *
             ritz::moment(two_s + static_cast<unsigned>(j + k) + 1);
  return sum;
}

Real ode_residual(const RadialWavefunction& r, const Real& w,
                  const model::ScaledModel& m,
                  const std::vector<Real>& grid) {
  // With R = f P, f = xi^s e^{-xi^2/2}, the operator reduces to
  //   f/xi^2 * [ xi^2 P'' + xi (theta_s - 2 xi^2) P'
  //              + ((s^2 - l^2) + g_w xi^2 + alpha xi) P ],
  // theta_s = 2s+1, g_w = W - 2s - 2; assemble that bracket symbolically.
  const Real s(r.s);
  const Real theta_s = 2 * s + 1;
  const Real g_w = w - 2 * s - 2;
  const Real l2 = Real(m.l) * Real(m.l);

  const std::size_t np = r.poly.size();
  std::vector<Real> q(np + 2);
  for (std::size_t k = 0; k < np; ++k) {
    const Real& c = r.poly[k];
    const Real kk(static_cast<unsigned>(k));
    // xi^2 P'' and xi theta_s P' keep degree k; -2 xi^3 P' raises it by 2
    q[k] += (kk * (kk - 1) + theta_s * kk + (s * s - l2)) * c;
    q[k + 2] += (g_w - 2 * kk) * c;
    q[k + 1] += m.alpha * c;
  }

  Real worst = 0;
  for (const Real& xi : grid) {
    if (!(xi > 0))
      throw std::invalid_argument("residual grid points must be positive");
    Real acc = 0;
    for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * xi + *it;
    Real res = abs(acc * pow(xi, Real(r.s) - 2) * exp(-xi * xi / 2));
    worst = std::max(worst, res);
  }
  return worst;
}

}  // namespace heunspec::frobenius
