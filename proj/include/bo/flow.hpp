// Flow by quadrature in Birkhoff coordinates: explicit frequencies, the
// Hamiltonian as a function of the actions, phase rotation, and the full
// solution map with the mean handled by Galilean composition.
#pragma once

#include <span>

#include "bo/birkhoff.hpp"
#include "bo/inverse.hpp"

namespace bo {

// omega_n = n^2 - 2 sum_k min(n,k) a_k for n = 1..n_max.
std::vector<double> frequencies(std::span<const double> actions, int n_max);

// Frequencies of the zero-mean part when the initial datum has mean c:
// omega_{c,n} = omega_n - 2 c n. (The sign follows from
// v(t,x) = u(t, x - 2ct) + c; see README notes on conventions.)
std::vector<double> frequencies_c(std::span<const double> actions, double c,
                                  int n_max);

// H restricted to the actions: sum k^2 a_k - sum_k (sum_{p>=k} a_p)^2.
double hamiltonian_birkhoff(std::span<const double> actions);
double hamiltonian_birkhoff(const BirkhoffSeq& z);

// zeta_n(t) = zeta_n(0) e^{i (omega_n - 2cn) t}; moduli are preserved by
// construction. Arguments of large omega*t are reduced mod 2pi in extended
// precision so phases stay accurate out to t ~ 1e6.
BirkhoffSeq flow_birkhoff(const BirkhoffSeq& z0, double t, double c = 0.0);

// Full solution map: split off the mean c, transform, rotate with
// omega_{c,n}, invert, add c back.
RealPotential solve_flow(const RealPotential& v0, double t, const GridSpec& grid,
                         const InverseSettings& settings = {});

}  // namespace bo
