#include "analysis.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "errors.hpp"
#include "frobenius.hpp"
#include "reference_tables.hpp"

namespace heunspec::analysis {

namespace {

constexpr double kOverlayTol = 1e-8;     // "passes through" after refinement
constexpr double kCandidateTol = 0.5;    // coarse sweep-interpolation gate
constexpr double kDecreaseGuard = 1e-10; // strictness slack for sampled curves

}  // namespace

HFReport hellmann_feynman_check(double l, const Real& alpha, int level,
                                const Real& fd_step, int basis_n,
                                unsigned digits) {
  if (!(fd_step > 0)) throw std::invalid_argument("fd step must be positive");
  ScopedPrecision scope(digits);
  ritz::BasisSpec basis{l, basis_n, digits};

  const auto at = [&](const Real& a) { return ritz::solve(basis, a); };
  const auto plus = at(alpha + fd_step);
  const auto minus = at(alpha - fd_step);
  const auto center = at(alpha);
  if (level >= basis_n) throw std::out_of_range("level outside basis");

  HFReport report;
  report.alpha = alpha;
  report.level = level;
  report.lhs = (plus.eigenvalues[static_cast<std::size_t>(level)] -
                minus.eigenvalues[static_cast<std::size_t>(level)]) /
               (2 * fd_step);
  report.rhs = -ritz::expectation_inverse_xi(center, level);
  report.abs_diff = abs(report.lhs - report.rhs);
  return report;
}

std::vector<SpectrumCurve> spectrum_sweep(double l, const Real& alpha_min,
                                          const Real& alpha_max,
                                          const Real& step, int levels,
                                          int basis_n, unsigned digits,
                                          int jobs) {
  if (!(step > 0)) throw std::invalid_argument("step must be positive");
  if (!(alpha_max > alpha_min))
    throw std::invalid_argument("alpha range is empty");
  if (levels < 1 || levels > basis_n)
    throw std::invalid_argument("levels must lie in 1..basis_n");
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");

  ScopedPrecision scope(digits);
  std::vector<Real> alphas;
  for (Real a = alpha_min; a <= alpha_max + step / 2; a += step)
    alphas.push_back(a);

  std::vector<std::vector<Real>> columns(alphas.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  const auto worker = [&]() {
    ScopedPrecision thread_scope(digits);
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= alphas.size()) return;
      try {
        ritz::BasisSpec basis{l, basis_n, digits};
        auto result = ritz::solve(basis, alphas[i]);
        columns[i].assign(result.eigenvalues.begin(),
                          result.eigenvalues.begin() + levels);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const std::size_t nthreads =
        std::min(static_cast<std::size_t>(jobs), alphas.size());
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<SpectrumCurve> curves(static_cast<std::size_t>(levels));
  for (int v = 0; v < levels; ++v) {
    auto& curve = curves[static_cast<std::size_t>(v)];
    curve.l = l;
    curve.level = v;
    curve.basis_n = basis_n;
    curve.samples.reserve(alphas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i)
      curve.samples.emplace_back(alphas[i],
                                 columns[i][static_cast<std::size_t>(v)]);
  }

  const Real guard(kDecreaseGuard);
  for (const auto& curve : curves)
    for (std::size_t i = 1; i < curve.samples.size(); ++i)
      if (!(curve.samples[i].second <
            curve.samples[i - 1].second - guard))
        throw check_error(
            "curve for level " + std::to_string(curve.level) +
            " fails to decrease strictly near alpha = " +
            format_significant(curve.samples[i].first, 6));
  return curves;
}

namespace {

// linear interpolation of one curve at a; requires coverage
Real interpolate(const SpectrumCurve& curve, const Real& a) {
  const auto& s = curve.samples;
  if (a < s.front().first || a > s.back().first)
    throw std::invalid_argument("sweep does not cover the requested alpha");
  std::size_t hi = 1;
  while (hi + 1 < s.size() && s[hi].first < a) ++hi;
  const Real& x0 = s[hi - 1].first;
  const Real& x1 = s[hi].first;
  const Real t = (a - x0) / (x1 - x0);
  return s[hi - 1].second + t * (s[hi].second - s[hi - 1].second);
}

}  // namespace

OverlayReport truncation_overlay(double l, int n_max,
                                 const std::vector<SpectrumCurve>& sweep,
                                 unsigned digits) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (sweep.empty()) throw std::invalid_argument("sweep is empty");
  ScopedPrecision scope(digits);

  const int basis_n = sweep.front().basis_n;
  const Real tol(kOverlayTol);
  OverlayReport report;
  report.l = l;
  report.n_max = n_max;
  std::ostringstream detail;
  bool pass = true;

  // solve once per distinct root value; the zero root is shared
  struct RootJob {
    int n;
    int root_index;
    Real alpha;
    Real w_fixed;
    bool zero;
  };
  std::vector<RootJob> jobs;
  std::vector<Real> w_values(static_cast<std::size_t>(n_max) + 1);
  for (int n = 1; n <= n_max; ++n) {
    const auto sol = frobenius::truncation_solutions(l, n);
    w_values[static_cast<std::size_t>(n)] = sol.w_fixed;
    for (std::size_t i = 0; i < sol.alpha_roots.size(); ++i)
      jobs.push_back({n, static_cast<int>(i) + 1, sol.alpha_roots[i],
                      sol.w_fixed, sol.alpha_roots[i].is_zero()});
  }

  std::map<std::string, ritz::RitzResult> solved;
  const auto solve_at = [&](const Real& a) -> const ritz::RitzResult& {
    const std::string key = format_significant(a, static_cast<int>(digits));
    auto it = solved.find(key);
    if (it == solved.end()) {
      ritz::BasisSpec basis{l, basis_n, digits};
      it = solved.emplace(key, ritz::solve(basis, a)).first;
    }
    return it->second;
  };

  for (const RootJob& job : jobs) {
    OverlayPoint point;
    point.n = job.n;
    point.root_index = job.root_index;
    point.alpha = job.alpha;
    point.w_fixed = job.w_fixed;

    const auto& direct = solve_at(job.alpha);
    int matches = 0;
    for (int v = 0; v < direct.N; ++v) {
      if (abs(direct.eigenvalues[static_cast<std::size_t>(v)] - job.w_fixed) <
          tol) {
        if (matches == 0) point.matched_level = v;
        ++matches;
      }
    }
    point.unique_match = matches == 1;
    if (matches != 1) {
      pass = false;
      detail << "family n=" << job.n << " root " << job.root_index << " at "
             << format_significant(job.alpha, 10) << " matched " << matches
             << " levels; ";
    }

    // the swept curve through the matched level must pass nearby
    if (point.matched_level >= 0 &&
        point.matched_level < static_cast<int>(sweep.size())) {
      const Real w_interp =
          interpolate(sweep[static_cast<std::size_t>(point.matched_level)],
                      job.alpha);
      point.curve_consistent = abs(w_interp - job.w_fixed) < kCandidateTol;
      if (!point.curve_consistent) {
        pass = false;
        detail << "curve " << point.matched_level
               << " does not pass near the n=" << job.n << " point; ";
      }
    }

    // no other family value may sit in this vertical line's spectrum,
    // except the full even ladder on alpha = 0
    for (int other = 1; other <= n_max; ++other) {
      if (other == job.n) continue;
      bool other_matches = false;
      for (int v = 0; v < direct.N; ++v)
        if (abs(direct.eigenvalues[static_cast<std::size_t>(v)] -
                w_values[static_cast<std::size_t>(other)]) < tol)
          other_matches = true;
      const bool allowed = job.zero && other % 2 == 0;
      if (other_matches && !allowed) {
        pass = false;
        detail << "vertical line at "
               << format_significant(job.alpha, 10) << " (family n=" << job.n
               << ") also carries the n=" << other << " value; ";
      }
      if (job.zero && other % 2 == 0 && !other_matches) {
        pass = false;
        detail << "alpha = 0 is missing the even-family value n=" << other
               << "; ";
      }
    }

    // zero roots must land on the oscillator ladder at level n/2
    if (job.zero && point.matched_level != job.n / 2) {
      pass = false;
      detail << "alpha = 0 point of family n=" << job.n
             << " matched level " << point.matched_level << " instead of "
             << job.n / 2 << "; ";
    }

    report.points.push_back(std::move(point));
  }

  report.pass = pass;
  report.detail = detail.str();
  return report;
}

OnsetReport negative_onset(const std::vector<SpectrumCurve>& sweep) {
  if (sweep.empty()) throw std::invalid_argument("sweep is empty");
  const auto& ground = sweep.front().samples;
  OnsetReport report;
  for (std::size_t i = 1; i < ground.size(); ++i) {
    if (ground[i - 1].second >= 0 && ground[i].second < 0) {
      report.found = true;
      report.alpha_lo = ground[i - 1].first;
      report.alpha_hi = ground[i].first;
      return report;
    }
  }
  report.found = false;
  report.alpha_lo = ground.front().first;
  report.alpha_hi = ground.back().first;
  return report;
}

TableReport reproduce_table(int which, unsigned digits) {
  if (which != 1 && which != 2)
    throw std::invalid_argument("table selector must be 1 or 2");
  ScopedPrecision scope(digits);
  const auto& reference = reference_table(which);

  const Real alpha =
      which == 1 ? Real(-sqrt(Real(2))) : Real(sqrt(Real(2)));
  std::vector<int> n_values;
  for (const auto& row : reference) n_values.push_back(row.basis_n);
  const auto results = ritz::convergence_study(0.0, alpha, n_values, 4, digits);

  TableReport report;
  report.which = which;
  report.pass = true;
  for (std::size_t r = 0; r < reference.size(); ++r) {
    TableRow row;
    row.basis_n = reference[r].basis_n;
    const int cells = std::min(reference[r].basis_n, 4);
    for (int c = 0; c < cells; ++c) {
      TableCell cell;
      cell.expected = std::string(reference[r].cells[static_cast<std::size_t>(c)]);
      const Real& value =
          results[r].eigenvalues[static_cast<std::size_t>(c)];
      cell.computed = format_significant(value, 10);
      cell.match = matches_printed(value, cell.expected);
      if (!cell.match) report.pass = false;
      row.cells.push_back(std::move(cell));
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace heunspec::analysis
