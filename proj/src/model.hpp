#pragma once

#include <string>

#include "precision.hpp"

namespace heunspec::model {

// Parameters of the underlying planar problem: a particle of mass m with
// quadrupole moment Q in an electric field of amplitude E0, confined by an
// oscillator of angular frequency omega, with axial plane-wave number k.
// Separation of the stationary state into e^{il phi} e^{ikz} R(rho) leaves
// the radial equation solved by this library; the axial factor carries
// k^2/(2m) of energy. Units with hbar = c = 1 throughout. The derived
// coupling Q~ = 2 m Q is always recomputed, never stored.
struct PhysicalParams {
  double m = 1.0;      // mass, > 0
  double omega = 1.0;  // oscillator angular frequency, > 0
  double Q = 0.0;      // quadrupole moment
  double E0 = 0.0;     // field amplitude
  double k = 0.0;      // axial wavenumber
};

// The dimensionless radial problem: angular index l (entering only via |l|
// and l^2, so the spectrum is even in l) and Coulomb coupling alpha.
// alpha ranges over all reals; nothing quantizes it.
struct ScaledModel {
  double l = 0.0;
  Real alpha;
};

enum class AsymptoticKind { scattering, bound_candidate };

struct AsymptoticClass {
  AsymptoticKind kind = AsymptoticKind::scattering;
  double tau = 0.0;  // decay rate, set for bound candidates (zeta^2 = -tau^2)
  std::string note;  // reminder that only the planar problem binds
};

// alpha = Q~ E0 / sqrt(m omega) with Q~ = 2 m Q. Throws std::invalid_argument
// on non-finite inputs or m <= 0, omega <= 0.
double scale_alpha(const PhysicalParams& p);

ScaledModel scale(const PhysicalParams& p, double l);

// E = (omega/2) W + k^2/(2m): converts a dimensionless radial eigenvalue
// back to the energy of the full separated state.
double unscale_energy(double w, const PhysicalParams& p);

// -alpha/xi + xi^2, plus l^2/xi^2 when include_centrifugal; xi > 0.
// For alpha < 0 the curve has its minimum 3(-alpha/2)^(2/3) at
// xi = (-alpha/2)^(1/3); for alpha > 0 it rises monotonically from -inf.
double effective_potential(const ScaledModel& m, double xi,
                           bool include_centrifugal);

// Classifies the large-radius behaviour by the sign of zeta^2 = 2mE - k^2.
// zeta^2 == 0 is rejected as a threshold case (std::domain_error).
AsymptoticClass classify_asymptotics(double zeta_squared);

}  // namespace heunspec::model
