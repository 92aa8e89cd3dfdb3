#include "model.hpp"

#include <cmath>
#include <stdexcept>

namespace heunspec::model {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v))
    throw std::invalid_argument(std::string(name) + " must be finite");
}

void validate(const PhysicalParams& p) {
  require_finite(p.m, "m");
  require_finite(p.omega, "omega");
  require_finite(p.Q, "Q");
  require_finite(p.E0, "E0");
  require_finite(p.k, "k");
  if (p.m <= 0) throw std::invalid_argument("m must be positive");
  if (p.omega <= 0) throw std::invalid_argument("omega must be positive");
}

}  // namespace

double scale_alpha(const PhysicalParams& p) {
  validate(p);
  const double q_tilde = 2.0 * p.m * p.Q;
  return q_tilde * p.E0 / std::sqrt(p.m * p.omega);
}

ScaledModel scale(const PhysicalParams& p, double l) {
  require_finite(l, "l");
  return {l, Real(scale_alpha(p))};
}

double unscale_energy(double w, const PhysicalParams& p) {
  validate(p);
  require_finite(w, "W");
  return 0.5 * p.omega * w + p.k * p.k / (2.0 * p.m);
}

double effective_potential(const ScaledModel& m, double xi,
                           bool include_centrifugal) {
  require_finite(xi, "xi");
  if (xi <= 0) throw std::invalid_argument("xi must be positive");
  const double alpha = static_cast<double>(m.alpha);
  double v = -alpha / xi + xi * xi;
  if (include_centrifugal) v += m.l * m.l / (xi * xi);
  return v;
}

AsymptoticClass classify_asymptotics(double zeta_squared) {
  require_finite(zeta_squared, "zeta^2");
  if (zeta_squared == 0)
    throw std::domain_error(
        "zeta^2 = 0 sits on the scattering/bound threshold and is not "
        "classified");
  AsymptoticClass out;
  out.note =
      "classification applies to the planar radial problem only; the axial "
      "motion is free, so no fully three-dimensional state is normalizable";
  if (zeta_squared > 0) {
    out.kind = AsymptoticKind::scattering;
    out.tau = 0.0;
  } else {
    out.kind = AsymptoticKind::bound_candidate;
    out.tau = std::sqrt(-zeta_squared);
  }
  return out;
}

}  // namespace heunspec::model
