#include "bo/flow.hpp"

#include <cmath>

#include "bo/errors.hpp"

namespace bo {

std::vector<double> frequencies(std::span<const double> actions, int n_max) {
  const int k = static_cast<int>(actions.size());
  // omega_n = n^2 - 2 ( sum_{j<=n} j a_j + n sum_{j>n} a_j ).
  std::vector<double> weighted(static_cast<size_t>(k) + 1, 0.0);  // prefix of j a_j
  std::vector<double> suffix(static_cast<size_t>(k) + 2, 0.0);    // suffix of a_j
  for (int j = 1; j <= k; ++j)
    weighted[static_cast<size_t>(j)] =
        weighted[static_cast<size_t>(j - 1)] + double(j) * actions[static_cast<size_t>(j - 1)];
  for (int j = k; j >= 1; --j)
    suffix[static_cast<size_t>(j)] =
        suffix[static_cast<size_t>(j + 1)] + actions[static_cast<size_t>(j - 1)];
  std::vector<double> omega(static_cast<size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    int cut = n < k ? n : k;
    double coupling = weighted[static_cast<size_t>(cut)] +
                      double(n) * (n < k ? suffix[static_cast<size_t>(n + 1)] : 0.0);
    omega[static_cast<size_t>(n - 1)] = double(n) * double(n) - 2.0 * coupling;
  }
  return omega;
}

std::vector<double> frequencies_c(std::span<const double> actions, double c,
                                  int n_max) {
  std::vector<double> omega = frequencies(actions, n_max);
  for (int n = 1; n <= n_max; ++n)
    omega[static_cast<size_t>(n - 1)] -= 2.0 * c * double(n);
  return omega;
}

double hamiltonian_birkhoff(std::span<const double> actions) {
  const int k = static_cast<int>(actions.size());
  double quad = 0.0;
  for (int j = k; j >= 1; --j)
    quad += double(j) * double(j) * actions[static_cast<size_t>(j - 1)];
  double corr = 0.0, suffix = 0.0;
  for (int j = k; j >= 1; --j) {
    suffix += actions[static_cast<size_t>(j - 1)];
    corr += suffix * suffix;
  }
  return quad - corr;
}

double hamiltonian_birkhoff(const BirkhoffSeq& z) {
  return hamiltonian_birkhoff(z.actions());
}

BirkhoffSeq flow_birkhoff(const BirkhoffSeq& z0, double t, double c) {
  std::vector<double> acts = z0.actions();
  std::vector<double> omega = frequencies_c(acts, c, z0.count());
  BirkhoffSeq z(z0.count());
  for (int n = 1; n <= z0.count(); ++n) {
    // omega ~ n^2, so omega*t can be huge; reduce in extended precision.
    long double theta = static_cast<long double>(omega[static_cast<size_t>(n - 1)]) *
                        static_cast<long double>(t);
    double reduced = static_cast<double>(
        std::remainder(theta, 2.0L * 3.14159265358979323846264338327950288L));
    if (reduced == 0.0) {
      z.at(n) = z0.at(n);  // t = 0 and exact periods stay bitwise
      continue;
    }
    double r = std::abs(z0.at(n));
    double phase = std::arg(z0.at(n)) + reduced;
    z.at(n) = std::polar(r, phase);
  }
  return z;
}

RealPotential solve_flow(const RealPotential& v0, double t, const GridSpec& grid,
                         const InverseSettings& settings) {
  const double c = v0.mean();
  RealPotential u0 = v0.zero_mean();
  BirkhoffSeq z0 = birkhoff_coordinates(u0, grid);
  BirkhoffSeq zt = flow_birkhoff(z0, t, c);
  RealPotential ut = invert(zt, settings, grid);
  RealPotential out = ut.resized(std::max(ut.mode_cutoff(), v0.mode_cutoff()));
  out.set_mean(c);
  return out;
}

}  // namespace bo
