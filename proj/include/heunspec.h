/* heunspec — bound-state spectra of the planar quadrupole-oscillator radial
 * equation
 *
 *     R'' + R'/xi - l^2/xi^2 R + alpha/xi R - xi^2 R + W R = 0,   xi > 0,
 *
 * solved three independent ways: exact polynomial (series-truncation)
 * solutions, Rayleigh-Ritz variational diagonalisation in the basis
 * xi^(|l|+j) exp(-xi^2/2) at configurable decimal precision, and a
 * finite-volume discretisation used as a cross-check.
 *
 * C API conventions:
 *   - every fallible call returns hs_status; HS_OK is 0
 *   - results are returned through opaque handles with accessor functions;
 *     each handle has a matching *_free
 *   - a human-readable message for the last failed call on a context is
 *     available via hs_ctx_last_error
 *   - coupling strengths ("alpha") are passed as strings so that exact
 *     tokens survive the boundary unrounded: "sqrt2", "-sqrt6", "3/2",
 *     or any decimal literal
 *   - high-precision values are read back as decimal strings via the *_str
 *     accessors; plain double accessors are provided for convenience
 *
 * Threading: calls on distinct contexts are safe concurrently as long as all
 * live contexts use the same precision; a context itself must not be used
 * from two threads at once.
 */

#ifndef HEUNSPEC_H
#define HEUNSPEC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hs_status {
  HS_OK = 0,            /* success */
  HS_ERR_CHECK = 1,     /* a verification or consistency check failed */
  HS_ERR_ARG = 2,       /* invalid argument or malformed token */
  HS_ERR_PRECISION = 3, /* working precision exhausted; raise the digits */
  HS_ERR_INTERNAL = 4   /* unexpected internal failure */
} hs_status;

const char* hs_version(void);
const char* hs_status_name(hs_status status);

/* ---- context ------------------------------------------------------- */

typedef struct hs_ctx hs_ctx;

/* precision_digits: working decimal precision; 0 selects the default (50) */
hs_ctx* hs_ctx_new(unsigned precision_digits);
void hs_ctx_free(hs_ctx* ctx);
unsigned hs_ctx_digits(const hs_ctx* ctx);
const char* hs_ctx_last_error(const hs_ctx* ctx);

/* ---- physical model -------------------------------------------------- */

/* alpha = 2 m Q E0 / sqrt(m omega); requires m > 0, omega > 0, all finite */
hs_status hs_scale_alpha(hs_ctx* ctx, double m, double omega, double Q,
                         double E0, double* alpha);

/* energy = (omega/2) W + k^2/(2 m) */
hs_status hs_unscale_energy(hs_ctx* ctx, double W, double m, double omega,
                            double k, double* energy);

/* v = -alpha/xi + xi^2 (+ l^2/xi^2 when include_centrifugal), xi > 0 */
hs_status hs_effective_potential(hs_ctx* ctx, double l, double alpha,
                                 double xi, int include_centrifugal,
                                 double* v);

typedef enum hs_asymptotic_kind {
  HS_ASYMPTOTIC_SCATTERING = 0,
  HS_ASYMPTOTIC_BOUND_CANDIDATE = 1
} hs_asymptotic_kind;

/* Classifies by the sign of zeta^2 = 2 m E - k^2; tau = sqrt(-zeta^2) is
 * written for bound candidates (0 otherwise). zeta^2 == 0 is rejected as a
 * threshold case. `note`, if non-NULL, receives a reminder that the
 * classification concerns the planar problem only (axial motion is free, so
 * no fully 3D bound state exists). */
hs_status hs_classify_asymptotics(hs_ctx* ctx, double zeta_squared,
                                  hs_asymptotic_kind* kind, double* tau,
                                  char* note, size_t note_len);

/* ---- polynomial (series-truncation) solutions ------------------------ */

typedef struct hs_truncation hs_truncation;

/* Solves the degree-n truncation family for angular index l: the fixed
 * eigenvalue W = 2n + 2|l| + 2 together with the n+1 real roots of the
 * closing coefficient polynomial, each refined to root_digits significant
 * digits (0 selects the default, 40). n >= 1. */
hs_status hs_truncation_solve(hs_ctx* ctx, int n, double l,
                              unsigned root_digits, hs_truncation** out);
void hs_truncation_free(hs_truncation* t);

int hs_truncation_order(const hs_truncation* t);      /* n */
int hs_truncation_root_count(const hs_truncation* t); /* n + 1 */
double hs_truncation_w_fixed(const hs_truncation* t); /* 2n + 2|l| + 2 */

/* idx in [0, root_count), roots ascending */
hs_status hs_truncation_root(const hs_truncation* t, int idx, double* root);
hs_status hs_truncation_root_str(const hs_truncation* t, int idx,
                                 int sig_digits, char* buf, size_t len);

/* Evaluates the exact polynomial wavefunction R(xi) attached to root
 * root_idx (1-based, ascending), xi >= 0. */
hs_status hs_wavefunction_eval(hs_ctx* ctx, const hs_truncation* t,
                               int root_idx, double xi, double* value);

/* Squared L2 norm of that wavefunction under the planar radial measure
 * integral |R|^2 xi dxi (closed form; finite for every root). */
hs_status hs_wavefunction_norm_squared(hs_ctx* ctx, const hs_truncation* t,
                                       int root_idx, double* norm_sq);

/* Maximum absolute residual of the radial equation over a caller-supplied
 * grid of xi > 0 points, with W = w_fixed and alpha = the selected root.
 * Exact solutions give residuals at the rounding floor. */
hs_status hs_ode_residual_max(hs_ctx* ctx, const hs_truncation* t,
                              int root_idx, const double* grid, size_t npts,
                              double* max_residual);

/* ---- Rayleigh-Ritz variational solver -------------------------------- */

typedef struct hs_ritz hs_ritz;

/* Diagonalises the radial Hamiltonian in the N-function basis
 * xi^(|l|+j) exp(-xi^2/2), j = 0..N-1, at the context precision.
 * alpha_token: decimal literal or exact token (see file header). */
hs_status hs_ritz_solve(hs_ctx* ctx, double l, const char* alpha_token, int N,
                        hs_ritz** out);
void hs_ritz_free(hs_ritz* r);

int hs_ritz_size(const hs_ritz* r);

/* level in [0, N), eigenvalues ascending */
hs_status hs_ritz_eigenvalue(const hs_ritz* r, int level, double* w);
hs_status hs_ritz_eigenvalue_str(const hs_ritz* r, int level, int sig_digits,
                                 char* buf, size_t len);
hs_status hs_ritz_residual(const hs_ritz* r, int level, double* residual);

/* <1/xi> in the selected variational eigenstate (always positive) */
hs_status hs_ritz_expectation_inverse_xi(hs_ctx* ctx, const hs_ritz* r,
                                         int level, double* value);

/* Central-difference dW/dalpha at step fd_step vs. -<1/xi>, both from
 * basis-size-N variational runs. fd_step <= 0 and N <= 0 select defaults
 * (1e-3 and 25). */
hs_status hs_hf_check(hs_ctx* ctx, double l, const char* alpha_token,
                      int level, double fd_step, int N, double* lhs,
                      double* rhs, double* abs_diff);

/* ---- finite-volume cross-check ---------------------------------------- */

typedef struct hs_oracle hs_oracle;

/* Flux-form finite-volume discretisation on the offset grid
 * xi_i = (i+1/2) h, h = xi_max/npoints, Dirichlet wall at xi_max.
 * xi_max <= 0 and npoints <= 0 select defaults (12, 20000). When
 * richardson is nonzero the npoints and 2*npoints grids are combined into
 * an extrapolated value with an error bar. Runs in double precision. */
hs_status hs_oracle_solve(hs_ctx* ctx, double l, const char* alpha_token,
                          double xi_max, int npoints, int richardson,
                          int count, hs_oracle** out);
void hs_oracle_free(hs_oracle* o);

int hs_oracle_count(const hs_oracle* o);

/* error_bar receives a negative value when no estimate was requested */
hs_status hs_oracle_eigenvalue(const hs_oracle* o, int level, double* value,
                               double* error_bar);

/* ---- spectrum curves, overlay audit, reference tables ----------------- */

typedef struct hs_sweep hs_sweep;

/* Samples W_level(alpha) on the grid alpha_min + k*step for the lowest
 * `levels` levels at basis size basis_N. Bounds and step are tokens.
 * jobs >= 1 bounds internal parallelism; results are deterministic and
 * identical for every jobs value. Fails with HS_ERR_CHECK if any sampled
 * curve fails to decrease strictly with alpha. */
hs_status hs_sweep_run(hs_ctx* ctx, double l, const char* alpha_min,
                       const char* alpha_max, const char* step, int levels,
                       int basis_N, int jobs, hs_sweep** out);
void hs_sweep_free(hs_sweep* s);

int hs_sweep_levels(const hs_sweep* s);
int hs_sweep_points(const hs_sweep* s);
hs_status hs_sweep_sample(const hs_sweep* s, int level, int point,
                          double* alpha, double* w);
hs_status hs_sweep_sample_str(const hs_sweep* s, int level, int point,
                              int sig_digits, char* alpha_buf, size_t alpha_len,
                              char* w_buf, size_t w_len);

/* Smallest sampled alpha whose ground-level W is negative, as the bracketing
 * grid interval [alpha_lo, alpha_hi]. found is 0 when the sweep contains no
 * sign change (the range is then reported in the two outputs). */
hs_status hs_negative_onset(hs_ctx* ctx, const hs_sweep* s, int* found,
                            double* alpha_lo, double* alpha_hi);

typedef struct hs_overlay hs_overlay;

/* Audits every truncation point (alpha root, fixed W) for n = 1..n_max
 * against the swept spectrum curves: each nonzero root must lie on exactly
 * one curve (confirmed by a direct variational solve at the exact root), and
 * at alpha = 0 the even-n points must all land on the oscillator ladder. */
hs_status hs_overlay_run(hs_ctx* ctx, double l, int n_max, const hs_sweep* s,
                         hs_overlay** out);
void hs_overlay_free(hs_overlay* o);

int hs_overlay_point_count(const hs_overlay* o);
hs_status hs_overlay_point(const hs_overlay* o, int idx, int* n,
                           int* root_index, double* alpha, double* w_fixed,
                           int* matched_level, int* unique_match);
int hs_overlay_pass(const hs_overlay* o);
const char* hs_overlay_detail(const hs_overlay* o);

typedef struct hs_table hs_table;

/* Recomputes one of the two published 10-digit convergence tables for l = 0
 * (which = 1: alpha = -sqrt2, N = 2..10; which = 2: alpha = +sqrt2,
 * N = 2..13) and compares every cell after rounding to the printed digits.
 * The call itself succeeds even when cells differ; hs_table_pass reports
 * the outcome. */
hs_status hs_table_check(hs_ctx* ctx, int which, hs_table** out);
void hs_table_free(hs_table* t);

int hs_table_rows(const hs_table* t);
int hs_table_row_basis(const hs_table* t, int row);     /* N of this row */
int hs_table_row_cells(const hs_table* t, int row);
hs_status hs_table_cell(const hs_table* t, int row, int col, char* expected,
                        size_t expected_len, char* computed,
                        size_t computed_len, int* match);
int hs_table_pass(const hs_table* t);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HEUNSPEC_H */
