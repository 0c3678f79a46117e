#include "bo/fourier.hpp"

#include <cmath>

#include "bo/fft.hpp"

namespace bo {

RealPotential RealPotential::translated(double tau) const {
  RealPotential out(m_);
  out.set_mean(mean());
  for (int n = 1; n <= m_; ++n) {
    double ang = double(n) * tau;
    out.set_coef(n, coef(n) * cplx{std::cos(ang), std::sin(ang)});
  }
  return out;
}

cplx inner(const HardyVector& f, const HardyVector& g) {
  if (f.dim() != g.dim())
    throw DimensionError("inner: Hardy truncations differ");
  cplx acc{0.0, 0.0};
  for (int j = 0; j < f.dim(); ++j) acc += f[j] * std::conj(g[j]);
  return acc;
}

cplx inner(const RealPotential& f, const RealPotential& g) {
  if (f.mode_cutoff() != g.mode_cutoff())
    throw DimensionError("inner: mode cutoffs differ");
  cplx acc{0.0, 0.0};
  for (int n = -f.mode_cutoff(); n <= f.mode_cutoff(); ++n)
    acc += f.coef(n) * std::conj(g.coef(n));
  return acc;
}

namespace {
double bracket_weight(int n, double s) {
  double an = n < 0 ? -n : n;
  if (an < 1.0) an = 1.0;
  return std::pow(an, 2.0 * s);
}
}  // namespace

double sobolev_norm(const RealPotential& f, double s) {
  double acc = 0.0;
  for (int n = -f.mode_cutoff(); n <= f.mode_cutoff(); ++n)
    acc += bracket_weight(n, s) * std::norm(f.coef(n));
  return std::sqrt(acc);
}

double sobolev_norm(const HardyVector& f, double s) {
  double acc = 0.0;
  for (int j = 0; j < f.dim(); ++j)
    acc += bracket_weight(j, s) * std::norm(f[j]);
  return std::sqrt(acc);
}

RealPotential hilbert_transform(const RealPotential& f) {
  RealPotential out(f.mode_cutoff());
  // sign(0) = 0 kills the mean; (-i) uhat(n) for n > 0 keeps reality.
  for (int n = 1; n <= f.mode_cutoff(); ++n)
    out.set_coef(n, cplx{0.0, -1.0} * f.coef(n));
  return out;
}

HardyVector hardy_project(const RealPotential& f, int hardy_dim) {
  int dim = hardy_dim > 0 ? hardy_dim : f.mode_cutoff() + 1;
  HardyVector out(dim);
  int top = f.mode_cutoff() < dim - 1 ? f.mode_cutoff() : dim - 1;
  for (int n = 0; n <= top; ++n) out[n] = f.coef(n);
  return out;
}

HardyVector toeplitz_apply(const RealPotential& u, const HardyVector& f) {
  const int n = f.dim();
  const int m = u.mode_cutoff();
  HardyVector out(n);
  for (int j = 0; j < n; ++j) {
    cplx acc{0.0, 0.0};
    int klo = j - m < 0 ? 0 : j - m;
    int khi = j + m >= n ? n - 1 : j + m;
    for (int k = klo; k <= khi; ++k) acc += u.coef(j - k) * f[k];
    out[j] = acc;
  }
  return out;
}

std::vector<double> synthesize(const RealPotential& f, int num_points) {
  const int m = f.mode_cutoff();
  if (num_points < 2 * m + 1)
    throw DimensionError("synthesize: grid too small, synthesis would alias");
  std::vector<cplx> spec(static_cast<size_t>(num_points), cplx{0.0, 0.0});
  for (int n = -m; n <= m; ++n) {
    int idx = n >= 0 ? n : n + num_points;
    spec[static_cast<size_t>(idx)] = f.coef(n);
  }
  fft::inverse(spec);
  std::vector<double> out(static_cast<size_t>(num_points));
  for (int j = 0; j < num_points; ++j) out[static_cast<size_t>(j)] = spec[static_cast<size_t>(j)].real();
  return out;
}

RealPotential analyze(std::span<const double> samples, int mode_cutoff) {
  const int p = static_cast<int>(samples.size());
  if (p < 2 * mode_cutoff + 1)
    throw DimensionError("analyze: fewer samples than requested modes");
  std::vector<cplx> spec(samples.begin(), samples.end());
  fft::forward(spec);
  RealPotential out(mode_cutoff);
  const double scale = 1.0 / double(p);
  out.set_mean(spec[0].real() * scale);
  for (int n = 1; n <= mode_cutoff; ++n)
    out.set_coef(n, spec[static_cast<size_t>(n)] * scale);
  return out;
}

}  // namespace bo
