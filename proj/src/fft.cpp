#include "bo/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

namespace bo::fft {

namespace {

struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

// Plan creation is not thread-safe in FFTW; execution on distinct buffers is.
std::mutex g_mutex;
std::map<int, PlanPair>& cache() {
  static std::map<int, PlanPair> c;
  return c;
}

PlanPair plans_for(int n) {
  std::lock_guard<std::mutex> lock(g_mutex);
  auto it = cache().find(n);
  if (it != cache().end()) return it->second;
  fftw_complex* buf = fftw_alloc_complex(static_cast<size_t>(n));
  PlanPair p;
  p.fwd = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD,
                           FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.bwd = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD,
                           FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(buf);
  cache()[n] = p;
  return p;
}

}  // namespace

void forward(std::vector<std::complex<double>>& data) {
  if (data.empty()) return;
  PlanPair p = plans_for(static_cast<int>(data.size()));
  auto* raw = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(p.fwd, raw, raw);
}

void inverse(std::vector<std::complex<double>>& data) {
  if (data.empty()) return;
  PlanPair p = plans_for(static_cast<int>(data.size()));
  auto* raw = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(p.bwd, raw, raw);
}

std::vector<std::complex<double>> forward_reference(
    const std::vector<std::complex<double>>& data) {
  const int n = static_cast<int>(data.size());
  std::vector<std::complex<double>> out(data.size());
  for (int k = 0; k < n; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (int j = 0; j < n; ++j) {
      double ang = -2.0 * M_PI * double(j) * double(k) / double(n);
      acc += data[static_cast<size_t>(j)] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    out[static_cast<size_t>(k)] = acc;
  }
  return out;
}

std::vector<std::complex<double>> inverse_reference(
    const std::vector<std::complex<double>>& data) {
  const int n = static_cast<int>(data.size());
  std::vector<std::complex<double>> out(data.size());
  for (int j = 0; j < n; ++j) {
    std::complex<double> acc{0.0, 0.0};
    for (int k = 0; k < n; ++k) {
      double ang = 2.0 * M_PI * double(j) * double(k) / double(n);
      acc += data[static_cast<size_t>(k)] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    out[static_cast<size_t>(j)] = acc;
  }
  return out;
}

}  // namespace bo::fft
