// Deterministic test-data generators: random smooth potentials and explicit
// coefficient sequences with prescribed negative-Sobolev decay.
#pragma once

#include <cstdint>

#include "bo/fourier.hpp"

namespace bo {

// Zero-mean potential with independent coefficients uhat(n) ~ decay/n for
// n = 1..M, rescaled to the requested L^2 norm. The generator is a fixed
// xorshift mix so files reproduce bit-identically across reruns.
RealPotential random_smooth_potential(std::uint64_t seed, int mode_cutoff,
                                      double l2_norm);

// Coefficient sequence |uhat(n)| = <n>^{s - 1/2 - eps} with deterministic
// phases: finite representative of an H^{-s} element (s > 0).
RealPotential rough_decay_potential(std::uint64_t seed, int mode_cutoff,
                                    double s, double eps = 0.05);

}  // namespace bo
