// Direct pseudospectral solver for d/dt v = H d2/dx2 v - d/dx (v^2) on the
// torus: integrating-factor RK4 with the exact dispersive phase e^{i n|n| dt}
// and an alias-free quadratic term. Serves as the oracle for isospectrality,
// phase-evolution and traveling-wave tests.
#pragma once

#include <vector>

#include "bo/fourier.hpp"

namespace bo {

struct PdeState {
  RealPotential u;
  double t = 0.0;
};

struct Conserved {
  double mean = 0.0;     // <v|1>
  double half_l2 = 0.0;  // (1/2) <v|v>
  double energy = 0.0;   // (1/2pi) int ( (|dx|^{1/2} v)^2 / 2 - v^3 / 3 )
};

// Coefficient increment d/dt vhat(n) = i n|n| vhat(n) - i n (v^2)^(n).
RealPotential pde_rhs(const PdeState& state);

// One integrating-factor RK4 step; the linear phase is integrated exactly.
PdeState pde_step(const PdeState& state, double dt);

// Stability-policy step size 0.5 / (M (1 + max|v|)).
double pde_stable_dt(const RealPotential& v0);

// Integrates to time T with uniform steps of at most dt and returns the
// states at the requested sample times (snapped to the step grid; T itself
// is always exact). Norm growth beyond 1e6 raises FlowError.
std::vector<PdeState> pde_evolve(const RealPotential& v0, double T, double dt,
                                 std::vector<double> sample_times);

Conserved conserved(const PdeState& state);

}  // namespace bo
