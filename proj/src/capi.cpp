#include "heunspec.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "errors.hpp"
#include "frobenius.hpp"
#include "model.hpp"
#include "oracle.hpp"
#include "precision.hpp"
#include "ritz.hpp"

using namespace heunspec;

extern "C" {

struct hs_ctx {
  unsigned digits = kDefaultDigits;
  std::string last_error;
};

struct hs_truncation {
  frobenius::TruncationSolution solution;
};

struct hs_ritz {
  ritz::RitzResult result;
};

struct hs_oracle {
  std::vector<oracle::EigenEstimate> estimates;
};

struct hs_sweep {
  std::vector<analysis::SpectrumCurve> curves;
  double l = 0.0;
  unsigned digits = kDefaultDigits;
};

struct hs_overlay {
  analysis::OverlayReport report;
};

struct hs_table {
  analysis::TableReport report;
};

}  // extern "C"

namespace {

void set_error(hs_ctx* ctx, const std::string& message) {
  if (ctx) ctx->last_error = message;
}

template <typename Fn>
hs_status guarded(hs_ctx* ctx, Fn&& fn) {
  if (!ctx) return HS_ERR_ARG;
  try {
    fn();
    ctx->last_error.clear();
    return HS_OK;
  } catch (const precision_error& e) {
    set_error(ctx, e.what());
    return HS_ERR_PRECISION;
  } catch (const check_error& e) {
    set_error(ctx, e.what());
    return HS_ERR_CHECK;
  } catch (const std::invalid_argument& e) {
    set_error(ctx, e.what());
    return HS_ERR_ARG;
  } catch (const std::domain_error& e) {
    set_error(ctx, e.what());
    return HS_ERR_ARG;
  } catch (const std::out_of_range& e) {
    set_error(ctx, e.what());
    return HS_ERR_ARG;
  } catch (const std::bad_alloc&) {
    set_error(ctx, "out of memory");
    return HS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(ctx, e.what());
    return HS_ERR_INTERNAL;
  } catch (...) {
    set_error(ctx, "unknown failure");
    return HS_ERR_INTERNAL;
  }
}

// copies into a caller buffer; fails loudly rather than truncating a value
bool copy_out(const std::string& s, char* buf, size_t len) {
  if (!buf || len == 0 || s.size() + 1 > len) return false;
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return true;
}

}  // namespace

extern "C" {

const char* hs_version(void) { return "1.0.0"; }

const char* hs_status_name(hs_status status) {
  switch (status) {
    case HS_OK:
      return "ok";
    case HS_ERR_CHECK:
      return "check-failure";
    case HS_ERR_ARG:
      return "invalid-argument";
    case HS_ERR_PRECISION:
      return "precision-exhausted";
    case HS_ERR_INTERNAL:
      return "internal-error";
  }
  return "unknown";
}

hs_ctx* hs_ctx_new(unsigned precision_digits) {
  auto* ctx = new (std::nothrow) hs_ctx;
  if (!ctx) return nullptr;
  ctx->digits = precision_digits ? precision_digits : kDefaultDigits;
  return ctx;
}

void hs_ctx_free(hs_ctx* ctx) { delete ctx; }

unsigned hs_ctx_digits(const hs_ctx* ctx) { return ctx ? ctx->digits : 0; }

const char* hs_ctx_last_error(const hs_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

/* ---- model ----------------------------------------------------------- */

hs_status hs_scale_alpha(hs_ctx* ctx, double m, double omega, double Q,
                         double E0, double* alpha) {
  return guarded(ctx, [&] {
    if (!alpha) throw std::invalid_argument("alpha output is null");
    model::PhysicalParams p{m, omega, Q, E0, 0.0};
    *alpha = model::scale_alpha(p);
  });
}

hs_status hs_unscale_energy(hs_ctx* ctx, double W, double m, double omega,
                            double k, double* energy) {
  return guarded(ctx, [&] {
    if (!energy) throw std::invalid_argument("energy output is null");
    model::PhysicalParams p{m, omega, 0.0, 0.0, k};
    *energy = model::unscale_energy(W, p);
  });
}

hs_status hs_effective_potential(hs_ctx* ctx, double l, double alpha,
                                 double xi, int include_centrifugal,
                                 double* v) {
  return guarded(ctx, [&] {
    if (!v) throw std::invalid_argument("potential output is null");
    ScopedPrecision scope(ctx->digits);
    model::ScaledModel m{l, Real(alpha)};
    *v = model::effective_potential(m, xi, include_centrifugal != 0);
  });
}

hs_status hs_classify_asymptotics(hs_ctx* ctx, double zeta_squared,
                                  hs_asymptotic_kind* kind, double* tau,
                                  char* note, size_t note_len) {
  return guarded(ctx, [&] {
    if (!kind || !tau) throw std::invalid_argument("null output");
    const auto result = model::classify_asymptotics(zeta_squared);
    *kind = result.kind == model::AsymptoticKind::scattering
                ? HS_ASYMPTOTIC_SCATTERING
                : HS_ASYMPTOTIC_BOUND_CANDIDATE;
    *tau = result.tau;
    if (note && note_len > 0 && !copy_out(result.note, note, note_len))
      throw std::invalid_argument("note buffer too small");
  });
}

/* ---- truncation families --------------------------------------------- */

hs_status hs_truncation_solve(hs_ctx* ctx, int n, double l,
                              unsigned root_digits, hs_truncation** out) {
  return guarded(ctx, [&] {
    if (!out) throw std::invalid_argument("output handle is null");
    *out = nullptr;
    auto handle = std::make_unique<hs_truncation>();
    handle->solution = frobenius::truncation_solutions(
        l, n, root_digits ? root_digits : 40);
    *out = handle.release();
  });
}

void hs_truncation_free(hs_truncation* t) { delete t; }

int hs_truncation_order(const hs_truncation* t) {
  return t ? t->solution.n : -1;
}

int hs_truncation_root_count(const hs_truncation* t) {
  return t ? static_cast<int>(t->solution.alpha_roots.size()) : 0;
}

double hs_truncation_w_fixed(const hs_truncation* t) {
  return t ? static_cast<double>(t->solution.w_fixed) : 0.0;
}

hs_status hs_truncation_root(const hs_truncation* t, int idx, double* root) {
  if (!t || !root || idx < 0 ||
      idx >= static_cast<int>(t->solution.alpha_roots.size()))
    return HS_ERR_ARG;
  *root = static_cast<double>(
      t->solution.alpha_roots[static_cast<std::size_t>(idx)]);
  return HS_OK;
}

hs_status hs_truncation_root_str(const hs_truncation* t, int idx,
                                 int sig_digits, char* buf, size_t len) {
  if (!t || idx < 0 ||
      idx >= static_cast<int>(t->solution.alpha_roots.size()) ||
      sig_digits < 1)
    return HS_ERR_ARG;
  const std::string s = format_significant(
      t->solution.alpha_roots[static_cast<std::size_t>(idx)], sig_digits);
  return copy_out(s, buf, len) ? HS_OK : HS_ERR_ARG;
}

hs_status hs_wavefunction_eval(hs_ctx* ctx, const hs_truncation* t,
                               int root_idx, double xi, double* value) {
  return guarded(ctx, [&] {
    if (!t || !value) throw std::invalid_argument("null argument");
    if (xi < 0) throw std::invalid_argument("xi must be >= 0");
    const auto r = frobenius::polynomial_wavefunction(t->solution, root_idx);
    ScopedPrecision scope(ctx->digits);
    *value = static_cast<double>(r(Real(xi)));
  });
}

hs_status hs_wavefunction_norm_squared(hs_ctx* ctx, const hs_truncation* t,
                                       int root_idx, double* norm_sq) {
  return guarded(ctx, [&] {
    if (!t || !norm_sq) throw std::invalid_argument("null argument");
    const auto r = frobenius::polynomial_wavefunction(t->solution, root_idx);
    ScopedPrecision scope(ctx->digits);
    *norm_sq = static_cast<double>(frobenius::norm_squared(r));
  });
}

hs_status hs_ode_residual_max(hs_ctx* ctx, const hs_truncation* t,
                              int root_idx, const double* grid, size_t npts,
                              double* max_residual) {
  return guarded(ctx, [&] {
    if (!t || !grid || !max_residual || npts == 0)
      throw std::invalid_argument("null argument");
    const auto r = frobenius::polynomial_wavefunction(t->solution, root_idx);
    ScopedPrecision scope(t->solution.root_digits + 10);
    std::vector<Real> points;
    points.reserve(npts);
    for (size_t i = 0; i < npts; ++i) points.emplace_back(grid[i]);
    model::ScaledModel m{
        t->solution.l,
        t->solution.alpha_roots[static_cast<std::size_t>(root_idx - 1)]};
    *max_residual = static_cast<double>(
        frobenius::ode_residual(r, t->solution.w_fixed, m, points));
  });
}

/* ---- variational solver ----------------------------------------------- */

hs_status hs_ritz_solve(hs_ctx* ctx, double l, const char* alpha_token, int N,
                        hs_ritz** out) {
  return guarded(ctx, [&] {
    if (!out || !alpha_token) throw std::invalid_argument("null argument");
    *out = nullptr;
    ScopedPrecision scope(ctx->digits);
    const Real alpha = parse_alpha_token(alpha_token);
    ritz::BasisSpec basis{l, N, ctx->digits};
    auto handle = std::make_unique<hs_ritz>();
    handle->result = ritz::solve(basis, alpha);
    *out = handle.release();
  });
}

void hs_ritz_free(hs_ritz* r) { delete r; }

int hs_ritz_size(const hs_ritz* r) { return r ? r->result.N : 0; }

hs_status hs_ritz_eigenvalue(const hs_ritz* r, int level, double* w) {
  if (!r || !w || level < 0 || level >= r->result.N) return HS_ERR_ARG;
  *w = static_cast<double>(
      r->result.eigenvalues[static_cast<std::size_t>(level)]);
  return HS_OK;
}

hs_status hs_ritz_eigenvalue_str(const hs_ritz* r, int level, int sig_digits,
                                 char* buf, size_t len) {
  if (!r || level < 0 || level >= r->result.N || sig_digits < 1)
    return HS_ERR_ARG;
  const std::string s = format_significant(
      r->result.eigenvalues[static_cast<std::size_t>(level)], sig_digits);
  return copy_out(s, buf, len) ? HS_OK : HS_ERR_ARG;
}

hs_status hs_ritz_residual(const hs_ritz* r, int level, double* residual) {
  if (!r || !residual || level < 0 || level >= r->result.N) return HS_ERR_ARG;
  *residual = static_cast<double>(
      r->result.residual_norms[static_cast<std::size_t>(level)]);
  return HS_OK;
}

hs_status hs_ritz_expectation_inverse_xi(hs_ctx* ctx, const hs_ritz* r,
                                         int level, double* value) {
  return guarded(ctx, [&] {
    if (!r || !value) throw std::invalid_argument("null argument");
    *value = static_cast<double>(ritz::expectation_inverse_xi(r->result, level));
  });
}

hs_status hs_hf_check(hs_ctx* ctx, double l, const char* alpha_token,
                      int level, double fd_step, int N, double* lhs,
                      double* rhs, double* abs_diff) {
  return guarded(ctx, [&] {
    if (!alpha_token || !lhs || !rhs || !abs_diff)
      throw std::invalid_argument("null argument");
    ScopedPrecision scope(ctx->digits);
    const Real alpha = parse_alpha_token(alpha_token);
    const Real step = fd_step > 0 ? Real(fd_step) : Real("1e-3");
    const int basis_n = N > 0 ? N : 25;
    const auto report = analysis::hellmann_feynman_check(
        l, alpha, level, step, basis_n, ctx->digits);
    *lhs = static_cast<double>(report.lhs);
    *rhs = static_cast<double>(report.rhs);
    *abs_diff = static_cast<double>(report.abs_diff);
  });
}

/* ---- finite-volume cross-check ---------------------------------------- */

hs_status hs_oracle_solve(hs_ctx* ctx, double l, const char* alpha_token,
                          double xi_max, int npoints, int richardson,
                          int count, hs_oracle** out) {
  return guarded(ctx, [&] {
    if (!out || !alpha_token) throw std::invalid_argument("null argument");
    *out = nullptr;
    ScopedPrecision scope(ctx->digits);
    model::ScaledModel m{l, parse_alpha_token(alpha_token)};
    oracle::GridSpec grid;
    if (xi_max > 0) grid.xi_max = xi_max;
    if (npoints > 0) grid.npoints = npoints;
    grid.richardson = richardson != 0;
    auto handle = std::make_unique<hs_oracle>();
    handle->estimates = oracle::fd_spectrum(m, grid, count);
    *out = handle.release();
  });
}

void hs_oracle_free(hs_oracle* o) { delete o; }

int hs_oracle_count(const hs_oracle* o) {
  return o ? static_cast<int>(o->estimates.size()) : 0;
}

hs_status hs_oracle_eigenvalue(const hs_oracle* o, int level, double* value,
                               double* error_bar) {
  if (!o || !value || level < 0 ||
      level >= static_cast<int>(o->estimates.size()))
    return HS_ERR_ARG;
  const auto& e = o->estimates[static_cast<std::size_t>(level)];
  *value = e.value;
  if (error_bar) *error_bar = e.error_bar.value_or(-1.0);
  return HS_OK;
}

/* ---- sweeps, overlay, tables ------------------------------------------ */

hs_status hs_sweep_run(hs_ctx* ctx, double l, const char* alpha_min,
                       const char* alpha_max, const char* step, int levels,
                       int basis_N, int jobs, hs_sweep** out) {
  return guarded(ctx, [&] {
    if (!out || !alpha_min || !alpha_max || !step)
      throw std::invalid_argument("null argument");
    *out = nullptr;
    ScopedPrecision scope(ctx->digits);
    auto handle = std::make_unique<hs_sweep>();
    handle->l = l;
    handle->digits = ctx->digits;
    handle->curves = analysis::spectrum_sweep(
        l, parse_alpha_token(alpha_min), parse_alpha_token(alpha_max),
        parse_alpha_token(step), levels, basis_N, ctx->digits,
        jobs > 0 ? jobs : 1);
    *out = handle.release();
  });
}

void hs_sweep_free(hs_sweep* s) { delete s; }

int hs_sweep_levels(const hs_sweep* s) {
  return s ? static_cast<int>(s->curves.size()) : 0;
}

int hs_sweep_points(const hs_sweep* s) {
  return s && !s->curves.empty()
             ? static_cast<int>(s->curves.front().samples.size())
             : 0;
}

hs_status hs_sweep_sample(const hs_sweep* s, int level, int point,
                          double* alpha, double* w) {
  if (!s || !alpha || !w || level < 0 ||
      level >= static_cast<int>(s->curves.size()))
    return HS_ERR_ARG;
  const auto& samples = s->curves[static_cast<std::size_t>(level)].samples;
  if (point < 0 || point >= static_cast<int>(samples.size()))
    return HS_ERR_ARG;
  *alpha = static_cast<double>(samples[static_cast<std::size_t>(point)].first);
  *w = static_cast<double>(samples[static_cast<std::size_t>(point)].second);
  return HS_OK;
}

hs_status hs_sweep_sample_str(const hs_sweep* s, int level, int point,
                              int sig_digits, char* alpha_buf,
                              size_t alpha_len, char* w_buf, size_t w_len) {
  if (!s || level < 0 || level >= static_cast<int>(s->curves.size()) ||
      sig_digits < 1)
    return HS_ERR_ARG;
  const auto& samples = s->curves[static_cast<std::size_t>(level)].samples;
  if (point < 0 || point >= static_cast<int>(samples.size()))
    return HS_ERR_ARG;
  const auto& sample = samples[static_cast<std::size_t>(point)];
  if (!copy_out(format_significant(sample.first, sig_digits), alpha_buf,
                alpha_len))
    return HS_ERR_ARG;
  if (!copy_out(format_significant(sample.second, sig_digits), w_buf, w_len))
    return HS_ERR_ARG;
  return HS_OK;
}

hs_status hs_negative_onset(hs_ctx* ctx, const hs_sweep* s, int* found,
                            double* alpha_lo, double* alpha_hi) {
  return guarded(ctx, [&] {
    if (!s || !found || !alpha_lo || !alpha_hi)
      throw std::invalid_argument("null argument");
    const auto report = analysis::negative_onset(s->curves);
    *found = report.found ? 1 : 0;
    *alpha_lo = static_cast<double>(report.alpha_lo);
    *alpha_hi = static_cast<double>(report.alpha_hi);
  });
}

hs_status hs_overlay_run(hs_ctx* ctx, double l, int n_max, const hs_sweep* s,
                         hs_overlay** out) {
  return guarded(ctx, [&] {
    if (!out || !s) throw std::invalid_argument("null argument");
    *out = nullptr;
    auto handle = std::make_unique<hs_overlay>();
    handle->report =
        analysis::truncation_overlay(l, n_max, s->curves, ctx->digits);
    *out = handle.release();
  });
}

void hs_overlay_free(hs_overlay* o) { delete o; }

int hs_overlay_point_count(const hs_overlay* o) {
  return o ? static_cast<int>(o->report.points.size()) : 0;
}

hs_status hs_overlay_point(const hs_overlay* o, int idx, int* n,
                           int* root_index, double* alpha, double* w_fixed,
                           int* matched_level, int* unique_match) {
  if (!o || idx < 0 || idx >= static_cast<int>(o->report.points.size()))
    return HS_ERR_ARG;
  const auto& p = o->report.points[static_cast<std::size_t>(idx)];
  if (n) *n = p.n;
  if (root_index) *root_index = p.root_index;
  if (alpha) *alpha = static_cast<double>(p.alpha);
  if (w_fixed) *w_fixed = static_cast<double>(p.w_fixed);
  if (matched_level) *matched_level = p.matched_level;
  if (unique_match) *unique_match = p.unique_match ? 1 : 0;
  return HS_OK;
}

int hs_overlay_pass(const hs_overlay* o) {
  return o && o->report.pass ? 1 : 0;
}

const char* hs_overlay_detail(const hs_overlay* o) {
  return o ? o->report.detail.c_str() : "null overlay";
}

hs_status hs_table_check(hs_ctx* ctx, int which, hs_table** out) {
  return guarded(ctx, [&] {
    if (!out) throw std::invalid_argument("null argument");
    *out = nullptr;
    auto handle = std::make_unique<hs_table>();
    handle->report = analysis::reproduce_table(which, ctx->digits);
    *out = handle.release();
  });
}

void hs_table_free(hs_table* t) { delete t; }

int hs_table_rows(const hs_table* t) {
  return t ? static_cast<int>(t->report.rows.size()) : 0;
}

int hs_table_row_basis(const hs_table* t, int row) {
  if (!t || row < 0 || row >= static_cast<int>(t->report.rows.size()))
    return -1;
  return t->report.rows[static_cast<std::size_t>(row)].basis_n;
}

int hs_table_row_cells(const hs_table* t, int row) {
  if (!t || row < 0 || row >= static_cast<int>(t->report.rows.size()))
    return 0;
  return static_cast<int>(
      t->report.rows[static_cast<std::size_t>(row)].cells.size());
}

hs_status hs_table_cell(const hs_table* t, int row, int col, char* expected,
                        size_t expected_len, char* computed,
                        size_t computed_len, int* match) {
  if (!t || row < 0 || row >= static_cast<int>(t->report.rows.size()))
    return HS_ERR_ARG;
  const auto& cells = t->report.rows[static_cast<std::size_t>(row)].cells;
  if (col < 0 || col >= static_cast<int>(cells.size())) return HS_ERR_ARG;
  const auto& cell = cells[static_cast<std::size_t>(col)];
  if (expected && !copy_out(cell.expected, expected, expected_len))
    return HS_ERR_ARG;
  if (computed && !copy_out(cell.computed, computed, computed_len))
    return HS_ERR_ARG;
  if (match) *match = cell.match ? 1 : 0;
  return HS_OK;
}

int hs_table_pass(const hs_table* t) { return t && t->report.pass ? 1 : 0; }

}  // extern "C"
