// Closed-form one-gap potentials and a damped-Newton numerical inverse of
// the truncated Birkhoff map.
#pragma once

#include "bo/birkhoff.hpp"
#include "bo/fourier.hpp"
#include "bo/grid.hpp"

namespace bo {

struct InverseSettings {
  int max_iter = 40;
  double tol = 1e-9;     // residual ||Phi(u) - z|| in h^{1/2}
  double damping = 1.0;  // initial Newton step scale, halved on increase
  double fd_step = 1e-6;
  int max_coords = 48;   // cap on matched coordinates
};

// u_{0,q}(x) = 2 Re( q e^{ix} / (1 - q e^{ix}) ): uhat(n) = q^{|n|}, zero
// mean. Warns when q^M > 1e-14 (truncated tail would be visible).
RealPotential one_gap_potential(double q, int mode_cutoff);

// First-order inverse of the linearization zeta_n ~ -uhat(n)/sqrt(n):
// uhat(n) = -zeta_n sqrt(n), symmetrized, zero mean.
RealPotential linear_initializer(const BirkhoffSeq& z, int mode_cutoff);

// Damped Newton on the real coordinates (Re uhat(n), Im uhat(n)) against
// (Re zeta_n, Im zeta_n), Jacobian by central finite differences and reused
// across iterations while it contracts. All provided target coordinates are
// matched, up to settings.max_coords.
RealPotential invert(const BirkhoffSeq& z_target, const InverseSettings& settings,
                     const GridSpec& grid);

}  // namespace bo
