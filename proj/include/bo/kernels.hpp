// Data-parallel kernels, each with a serial reference implementation kept
// for testing and a fast path (FFT-based or OpenMP). The benchmark tool
// compares the variants; the test suite asserts they agree.
#pragma once

#include "bo/fourier.hpp"

namespace bo::kernels {

// v^2 truncated back to the cutoff of v. The collocation grid uses
// P >= 3M+1 points so the retained band is alias-free (exact).
RealPotential square_dealiased_fft(const RealPotential& v);

// O(M^2) direct convolution reference.
RealPotential square_dealiased_direct(const RealPotential& v);

// (1/2pi) int v^3 dx.
double cubic_mean_fft(const RealPotential& v);
double cubic_mean_direct(const RealPotential& v);

// Toeplitz application split across rows.
HardyVector toeplitz_apply_serial(const RealPotential& u, const HardyVector& f);
HardyVector toeplitz_apply_parallel(const RealPotential& u, const HardyVector& f);

}  // namespace bo::kernels
