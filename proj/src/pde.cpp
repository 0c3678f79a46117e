#include "bo/pde.hpp"

#include <algorithm>
#include <cmath>

#include "bo/errors.hpp"
#include "bo/kernels.hpp"

namespace bo {

namespace {

// Coefficient vectors are handled as length 2M+1 arrays (index n+M) inside
// the stepper to avoid symmetry bookkeeping; reality is restored on output.
using Coeffs = std::vector<cplx>;

Coeffs to_coeffs(const RealPotential& u) {
  const int m = u.mode_cutoff();
  Coeffs c(static_cast<size_t>(2 * m + 1));
  for (int n = -m; n <= m; ++n) c[static_cast<size_t>(n + m)] = u.coef(n);
  return c;
}

RealPotential to_potential(const Coeffs& c) {
  const int m = (static_cast<int>(c.size()) - 1) / 2;
  RealPotential u(m);
  u.set_mean(c[static_cast<size_t>(m)].real());
  for (int n = 1; n <= m; ++n) u.set_coef(n, c[static_cast<size_t>(m + n)]);
  return u;
}

Coeffs nonlinear(const Coeffs& c) {
  RealPotential sq = kernels::square_dealiased_fft(to_potential(c));
  const int m = (static_cast<int>(c.size()) - 1) / 2;
  Coeffs out(c.size());
  for (int n = -m; n <= m; ++n)
    out[static_cast<size_t>(n + m)] = cplx{0.0, -double(n)} * sq.coef(n);
  return out;
}

}  // namespace

RealPotential pde_rhs(const PdeState& state) {
  const int m = state.u.mode_cutoff();
  RealPotential sq = kernels::square_dealiased_fft(state.u);
  RealPotential out(m);
  for (int n = 1; n <= m; ++n) {
    cplx lin = cplx{0.0, double(n) * std::abs(double(n))} * state.u.coef(n);
    cplx nl = cplx{0.0, -double(n)} * sq.coef(n);
    out.set_coef(n, lin + nl);
  }
  return out;  // mean mode is stationary
}

PdeState pde_step(const PdeState& state, double dt) {
  const int m = state.u.mode_cutoff();
  Coeffs u = to_coeffs(state.u);
  const size_t len = u.size();

  Coeffs e1(len);  // e^{i n|n| dt/2}
  for (int n = -m; n <= m; ++n) {
    double phase = double(n) * std::abs(double(n)) * dt * 0.5;
    e1[static_cast<size_t>(n + m)] = cplx{std::cos(phase), std::sin(phase)};
  }
  auto mul = [&](const Coeffs& a, const Coeffs& b) {
    Coeffs out(len);
    for (size_t i = 0; i < len; ++i) out[i] = a[i] * b[i];
    return out;
  };
  auto axpy = [&](const Coeffs& a, double s, const Coeffs& b) {
    Coeffs out(len);
    for (size_t i = 0; i < len; ++i) out[i] = a[i] + s * b[i];
    return out;
  };

  Coeffs a = mul(e1, u);
  Coeffs n1 = nonlinear(u);
  Coeffs n2 = nonlinear(axpy(a, dt / 2.0, mul(e1, n1)));
  Coeffs n3 = nonlinear(axpy(a, dt / 2.0, n2));
  Coeffs n4 = nonlinear(mul(e1, axpy(a, dt, n3)));

  Coeffs out(len);
  for (size_t i = 0; i < len; ++i) {
    cplx e2 = e1[i] * e1[i];
    out[i] = e2 * u[i] +
             (dt / 6.0) * (e2 * n1[i] + 2.0 * e1[i] * (n2[i] + n3[i]) + n4[i]);
  }
  return PdeState{to_potential(out), state.t + dt};
}

double pde_stable_dt(const RealPotential& v0) {
  int p = 1;
  while (p < 2 * v0.mode_cutoff() + 2) p *= 2;
  std::vector<double> s = synthesize(v0, p);
  double vmax = 0.0;
  for (double x : s) vmax = std::max(vmax, std::abs(x));
  return 0.5 / (double(v0.mode_cutoff()) * (1.0 + vmax));
}

std::vector<PdeState> pde_evolve(const RealPotential& v0, double T, double dt,
                                 std::vector<double> sample_times) {
  if (T < 0.0 || dt <= 0.0) throw FlowError("pde_evolve: need T >= 0, dt > 0");
  const long steps = std::max(1L, std::lround(std::ceil(T / dt - 1e-12)));
  const double h = T / double(steps);

  std::sort(sample_times.begin(), sample_times.end());
  std::vector<long> sample_steps;
  for (double t : sample_times) {
    long k = std::lround(t / h);
    k = std::clamp(k, 0L, steps);
    if (sample_steps.empty() || sample_steps.back() != k) sample_steps.push_back(k);
  }
  if (sample_steps.empty()) sample_steps.push_back(steps);

  const double norm0 = sobolev_norm(v0, 0.0);
  std::vector<PdeState> out;
  PdeState s{v0, 0.0};
  size_t next = 0;
  if (sample_steps[0] == 0) {
    out.push_back(s);
    ++next;
  }
  for (long k = 1; k <= steps && next < sample_steps.size(); ++k) {
    s = pde_step(s, h);
    s.t = double(k) * h;  // avoid accumulated addition error
    if (k % 64 == 0 || k == steps) {
      double nn = sobolev_norm(s.u, 0.0);
      if (!std::isfinite(nn) || nn > 1e6 * (1.0 + norm0))
        throw FlowError("pde_evolve: norm blow-up at t = " + std::to_string(s.t));
    }
    if (k == sample_steps[next]) {
      out.push_back(s);
      ++next;
    }
  }
  return out;
}

Conserved conserved(const PdeState& state) {
  Conserved c;
  c.mean = state.u.mean();
  double l2 = 0.0, h_half = 0.0;
  for (int n = 1; n <= state.u.mode_cutoff(); ++n) {
    double a2 = std::norm(state.u.coef(n));
    l2 += 2.0 * a2;
    h_half += 2.0 * double(n) * a2;
  }
  l2 += state.u.mean() * state.u.mean();
  c.half_l2 = 0.5 * l2;
  c.energy = 0.5 * h_half - kernels::cubic_mean_fft(state.u) / 3.0;
  return c;
}

}  // namespace bo
