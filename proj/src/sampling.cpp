#include "bo/sampling.hpp"

#include <cmath>

namespace bo {

namespace {
// splitmix64: portable, stateless per-draw randomness.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
double unit(std::uint64_t x) {  // in [0, 1)
  return double(x >> 11) * 0x1.0p-53;
}
}  // namespace

RealPotential random_smooth_potential(std::uint64_t seed, int mode_cutoff,
                                      double l2_norm) {
  RealPotential u(mode_cutoff);
  for (int n = 1; n <= mode_cutoff; ++n) {
    std::uint64_t h = mix(seed * 0x100000001b3ULL + std::uint64_t(n));
    double re = 2.0 * unit(h) - 1.0;
    double im = 2.0 * unit(mix(h)) - 1.0;
    u.set_coef(n, cplx{re, im} / double(n));
  }
  double norm = sobolev_norm(u, 0.0);
  if (norm > 0.0 && l2_norm > 0.0) {
    double scale = l2_norm / norm;
    for (int n = 1; n <= mode_cutoff; ++n) u.set_coef(n, u.coef(n) * scale);
  }
  return u;
}

RealPotential rough_decay_potential(std::uint64_t seed, int mode_cutoff,
                                    double s, double eps) {
  RealPotential u(mode_cutoff);
  const double expo = s - 0.5 - eps;
  for (int n = 1; n <= mode_cutoff; ++n) {
    std::uint64_t h = mix(seed ^ (0x9e3779b9ULL * std::uint64_t(n)));
    double phase = 2.0 * M_PI * unit(h);
    double mag = std::pow(double(n), expo);
    u.set_coef(n, std::polar(mag, phase));
  }
  return u;
}

}  // namespace bo
