#include "bo/kernels.hpp"

#include <cmath>

#include "bo/fft.hpp"
#include "bo/parallel.hpp"

namespace bo::kernels {

namespace {
int collocation_points(int m) {
  int p = 1;
  while (p < 3 * m + 2) p *= 2;
  return p;
}

// Real samples of v on the dealias grid.
std::vector<cplx> grid_samples(const RealPotential& v, int p) {
  std::vector<cplx> spec(static_cast<size_t>(p), cplx{0.0, 0.0});
  const int m = v.mode_cutoff();
  for (int n = -m; n <= m; ++n)
    spec[static_cast<size_t>(n >= 0 ? n : n + p)] = v.coef(n);
  fft::inverse(spec);
  return spec;
}
}  // namespace

RealPotential square_dealiased_fft(const RealPotential& v) {
  const int m = v.mode_cutoff();
  const int p = collocation_points(m);
  std::vector<cplx> s = grid_samples(v, p);
  for (auto& x : s) {
    double r = x.real();
    x = cplx{r * r, 0.0};
  }
  fft::forward(s);
  RealPotential out(m);
  const double scale = 1.0 / double(p);
  out.set_mean(s[0].real() * scale);
  for (int n = 1; n <= m; ++n) out.set_coef(n, s[static_cast<size_t>(n)] * scale);
  return out;
}

RealPotential square_dealiased_direct(const RealPotential& v) {
  const int m = v.mode_cutoff();
  RealPotential out(m);
  for (int n = 0; n <= m; ++n) {
    cplx acc{0.0, 0.0};
    for (int k = n - m; k <= m; ++k) acc += v.coef(k) * v.coef(n - k);
    if (n == 0)
      out.set_mean(acc.real());
    else
      out.set_coef(n, acc);
  }
  return out;
}

double cubic_mean_fft(const RealPotential& v) {
  const int p = collocation_points(v.mode_cutoff());
  std::vector<cplx> s = grid_samples(v, p);
  double acc = 0.0;
  for (const auto& x : s) {
    double r = x.real();
    acc += r * r * r;
  }
  return acc / double(p);
}

double cubic_mean_direct(const RealPotential& v) {
  RealPotential sq = square_dealiased_direct(v);
  // mean(v^3) = sum_{|n|<=M} (v^2)^(n) conj(vhat(n)); higher modes of v^2
  // pair with vanishing coefficients of v.
  cplx acc{0.0, 0.0};
  for (int n = -v.mode_cutoff(); n <= v.mode_cutoff(); ++n)
    acc += sq.coef(n) * std::conj(v.coef(n));
  return acc.real();
}

HardyVector toeplitz_apply_serial(const RealPotential& u, const HardyVector& f) {
  return toeplitz_apply(u, f);
}

HardyVector toeplitz_apply_parallel(const RealPotential& u, const HardyVector& f) {
  const int n = f.dim();
  const int m = u.mode_cutoff();
  HardyVector out(n);
  parallel::for_range(n, [&](int j) {
    cplx acc{0.0, 0.0};
    int klo = j - m < 0 ? 0 : j - m;
    int khi = j + m >= n ? n - 1 : j + m;
    for (int k = klo; k <= khi; ++k) acc += u.coef(j - k) * f[k];
    out[j] = acc;
  });
  return out;
}

}  // namespace bo::kernels
