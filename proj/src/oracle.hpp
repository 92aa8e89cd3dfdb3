#pragma once

#include <optional>
#include <vector>

#include "model.hpp"

namespace heunspec::oracle {

// Offset finite-volume grid: cell centers xi_i = (i + 1/2) h with
// h = xi_max / npoints, so the origin is a regular flux boundary (the
// xi R' flux vanishes there identically) and no node touches xi = 0.
// A Dirichlet wall closes the domain at xi_max.
struct GridSpec {
  double xi_max = 12.0;
  int npoints = 20000;
  bool richardson = true;  // combine npoints and 2*npoints grids
};

struct EigenEstimate {
  double value = 0.0;
  std::optional<double> error_bar;  // set when richardson was requested
};

// Lowest `count` eigenvalues of the flux-form discretisation of
//   -(1/xi)(xi R')' + (l^2/xi^2 - alpha/xi + xi^2) R = W R.
// Double precision throughout; the scheme is second order in h. Rejects
// grids whose wall is felt by the computed states (relative eigenfunction
// mass beyond 0.9 xi_max above 1e-8).
std::vector<EigenEstimate> fd_spectrum(const model::ScaledModel& m,
                                       const GridSpec& grid, int count);

}  // namespace heunspec::oracle
