#pragma once

#include <string>
#include <utility>
#include <vector>

#include "precision.hpp"
#include "ritz.hpp"

namespace heunspec::analysis {

// W_level(alpha) sampled on an ascending alpha grid at fixed basis size.
// Along a curve W decreases strictly with alpha (the coupling derivative is
// -<1/xi> < 0, which holds exactly for the variational eigenvalues too).
struct SpectrumCurve {
  double l = 0.0;
  int level = 0;
  int basis_n = 0;
  std::vector<std::pair<Real, Real>> samples;  // (alpha, W)
};

struct HFReport {
  Real alpha;
  int level = 0;
  Real lhs;       // central-difference dW/dalpha
  Real rhs;       // -<1/xi>
  Real abs_diff;  // |lhs - rhs|
};

// Compares the numeric coupling derivative of W against -<1/xi>, both from
// basis-size-N runs at `digits` working digits. Both sides are negative.
HFReport hellmann_feynman_check(double l, const Real& alpha, int level,
                                const Real& fd_step, int basis_n = 25,
                                unsigned digits = kDefaultDigits);

// Samples the lowest `levels` curves on alpha_min + k*step. `jobs` bounds
// the worker threads; the result is independent of it. Throws check_error
// if any curve fails to decrease strictly.
std::vector<SpectrumCurve> spectrum_sweep(double l, const Real& alpha_min,
                                          const Real& alpha_max,
                                          const Real& step, int levels,
                                          int basis_n,
                                          unsigned digits = kDefaultDigits,
                                          int jobs = 1);

struct OverlayPoint {
  int n = 0;
  int root_index = 0;  // 1-based, ascending roots
  Real alpha;
  Real w_fixed;
  int matched_level = -1;
  bool unique_match = false;
  bool curve_consistent = false;  // sweep interpolation agrees with the match
};

struct OverlayReport {
  double l = 0.0;
  int n_max = 0;
  std::vector<OverlayPoint> points;
  bool pass = false;
  std::string detail;
};

// Audits the truncation points for n = 1..n_max against the sweep: every
// nonzero root must land on exactly one spectrum curve (confirmed by a
// direct solve at the exact root, tolerance 1e-8), no vertical line may
// carry two truncation values, and at alpha = 0 the even-n points must all
// sit on the oscillator ladder. The sweep must cover every root.
OverlayReport truncation_overlay(double l, int n_max,
                                 const std::vector<SpectrumCurve>& sweep,
                                 unsigned digits = kDefaultDigits);

struct OnsetReport {
  bool found = false;
  Real alpha_lo;  // bracketing grid interval when found,
  Real alpha_hi;  // otherwise the searched range
};

// First sampled sign change of the ground-level curve.
OnsetReport negative_onset(const std::vector<SpectrumCurve>& sweep);

struct TableCell {
  std::string expected;
  std::string computed;
  bool match = false;
};

struct TableRow {
  int basis_n = 0;
  std::vector<TableCell> cells;
};

struct TableReport {
  int which = 0;
  std::vector<TableRow> rows;
  bool pass = false;
};

// Recomputes a reference convergence table (1: alpha = -sqrt2, N = 2..10;
// 2: alpha = +sqrt2, N = 2..13, both l = 0) and compares every cell after
// rounding to the printed 10 significant digits.
TableReport reproduce_table(int which, unsigned digits = kDefaultDigits);

}  // namespace heunspec::analysis
