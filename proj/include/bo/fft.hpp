// Thin FFTW wrapper with a mutex-guarded plan cache. Plans are created with
// FFTW_ESTIMATE | FFTW_UNALIGNED so results are reproducible and execution is
// safe from multiple threads on caller-owned buffers.
#pragma once

#include <complex>
#include <vector>

namespace bo::fft {

// In-place forward transform: out[k] = sum_j in[j] e^{-2pi i jk / P}.
void forward(std::vector<std::complex<double>>& data);

// In-place inverse transform WITHOUT the 1/P factor:
// out[j] = sum_k in[k] e^{+2pi i jk / P}.
void inverse(std::vector<std::complex<double>>& data);

// O(P^2) reference transforms used to validate the FFT path.
std::vector<std::complex<double>> forward_reference(
    const std::vector<std::complex<double>>& data);
std::vector<std::complex<double>> inverse_reference(
    const std::vector<std::complex<double>>& data);

}  // namespace bo::fft
