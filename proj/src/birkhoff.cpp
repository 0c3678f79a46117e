#include "bo/birkhoff.hpp"

#include <cmath>
#include <cstdio>

#include "bo/errors.hpp"
#include "bo/parallel.hpp"

namespace bo {

namespace {
constexpr double kGapClamp = 1e-10;   // roundoff window for negative gaps
constexpr double kGapSkip = 1e-12;    // product factors below this are 1
}  // namespace

std::vector<double> gaps_from_spectrum(const Eigen::VectorXd& lambda,
                                       int converged) {
  const int count = converged < 0 ? static_cast<int>(lambda.size()) - 1 : converged;
  std::vector<double> gamma(static_cast<size_t>(std::max(0, static_cast<int>(lambda.size()) - 1)), 0.0);
  for (int n = 1; n + 1 <= static_cast<int>(lambda.size()); ++n) {
    double g = lambda[n] - lambda[n - 1] - 1.0;
    if (g < 0.0 && n <= count) {
      if (g < -kGapClamp)
        throw TruncationError("gaps_from_spectrum: gamma_" + std::to_string(n) +
                              " = " + std::to_string(g) +
                              " below -1e-10; truncation not converged");
      g = 0.0;
    }
    gamma[static_cast<size_t>(n - 1)] = g < 0.0 ? 0.0 : g;
  }
  return gamma;
}

double kappa(const SpectralData& s, int n) {
  if (n < 1 || n > s.converged)
    throw TruncationError("kappa: index " + std::to_string(n) +
                          " outside converged range " + std::to_string(s.converged));
  double out = 1.0 / (s.lambda[n] - s.lambda[0]);
  for (int p = 1; p <= s.converged; ++p) {
    if (p == n) continue;
    double g = s.gamma[static_cast<size_t>(p - 1)];
    if (g < kGapSkip) continue;
    double factor = 1.0 - g / (s.lambda[p] - s.lambda[n]);
    if (factor <= 0.0)
      throw TruncationError("kappa: nonpositive factor at p=" + std::to_string(p) +
                            ", n=" + std::to_string(n) + "; spectrum not converged");
    out *= factor;
  }
  return out;
}

BirkhoffSeq birkhoff_coordinates(const SpectralData& s) {
  const int k = std::max(0, s.converged);
  BirkhoffSeq z(k);
  for (int n = 1; n <= k; ++n)
    z.at(n) = s.inner_one[static_cast<size_t>(n)] /
              std::sqrt(s.kappa[static_cast<size_t>(n - 1)]);
  return z;
}

BirkhoffSeq birkhoff_coordinates(const RealPotential& u, const GridSpec& grid) {
  RealPotential w = u;
  if (std::abs(u.mean()) > 1e-13) {
    std::fprintf(stderr,
                 "bo: birkhoff_coordinates removing mean %.3e internally\n",
                 u.mean());
    w = u.zero_mean();
  }
  return birkhoff_coordinates(spectral_analysis(w, grid));
}

cplx generating_function_product(const SpectralData& s, cplx lambda) {
  cplx den = cplx(s.lambda[0], 0.0) + lambda;
  if (std::abs(den) < 1e-8)
    throw NumericalError("generating_function_product: lambda at -lambda_0 pole");
  cplx out = 1.0 / den;
  for (int n = 1; n <= s.converged; ++n) {
    double g = s.gamma[static_cast<size_t>(n - 1)];
    if (g < kGapSkip) continue;
    cplx d = cplx(s.lambda[n], 0.0) + lambda;
    if (std::abs(d) < 1e-8)
      throw NumericalError("generating_function_product: lambda near pole at n=" +
                           std::to_string(n));
    out *= (cplx{1.0, 0.0} - g / d);
  }
  return out;
}

double weighted_norm(const BirkhoffSeq& z, double s) {
  double acc = 0.0;
  for (int n = 1; n <= z.count(); ++n)
    acc += std::pow(double(n), 2.0 * s) * std::norm(z.at(n));
  return std::sqrt(acc);
}

double torus_distance(const BirkhoffSeq& z, std::span<const double> target_moduli,
                      double s) {
  if (static_cast<int>(target_moduli.size()) != z.count())
    throw DimensionError("torus_distance: length mismatch");
  double acc = 0.0;
  for (int n = 1; n <= z.count(); ++n) {
    double d = std::abs(z.at(n)) - target_moduli[static_cast<size_t>(n - 1)];
    acc += std::pow(double(n), 1.0 - 2.0 * s) * d * d;
  }
  return std::sqrt(acc);
}

TraceCheck trace_formula_check(const RealPotential& u, const GridSpec& grid) {
  RealPotential w = u.zero_mean();
  TraceCheck c;
  double norm = sobolev_norm(w, 0.0);
  c.lhs = norm * norm;
  BirkhoffSeq z = birkhoff_coordinates(w, grid);
  // Fixed-order summation keeps reruns bit-identical.
  double rhs = 0.0;
  for (int n = z.count(); n >= 1; --n) rhs += double(n) * std::norm(z.at(n));
  c.rhs = 2.0 * rhs;
  double scale = std::max(std::abs(c.lhs), 1e-300);
  c.relative_error = std::abs(c.lhs - c.rhs) / scale;
  return c;
}

std::vector<cplx> fd_gradient(const Functional& f, const RealPotential& u,
                              double h_fd) {
  const int m = u.mode_cutoff();
  std::vector<cplx> grad(static_cast<size_t>(2 * m + 1), cplx{0.0, 0.0});
  // Directions are independent; each slot is written exactly once, so the
  // parallel sweep is deterministic.
  parallel::for_range(m, [&](int idx) {
    int n = idx + 1;
    RealPotential up = u, um = u;
    up.set_coef(n, u.coef(n) + h_fd);
    um.set_coef(n, u.coef(n) - h_fd);
    cplx dfdx = (f(up) - f(um)) / (2.0 * h_fd);
    up = u;
    um = u;
    up.set_coef(n, u.coef(n) + cplx{0.0, h_fd});
    um.set_coef(n, u.coef(n) - cplx{0.0, h_fd});
    cplx dfdy = (f(up) - f(um)) / (2.0 * h_fd);
    if (!std::isfinite(dfdx.real()) || !std::isfinite(dfdx.imag()) ||
        !std::isfinite(dfdy.real()) || !std::isfinite(dfdy.imag()))
      throw NumericalError("fd_gradient: non-finite functional value at mode " +
                           std::to_string(n));
    grad[static_cast<size_t>(m + n)] = 0.5 * (dfdx + cplx{0.0, 1.0} * dfdy);
    grad[static_cast<size_t>(m - n)] = 0.5 * (dfdx - cplx{0.0, 1.0} * dfdy);
  });
  return grad;
}

namespace {
// {F,G} from already-assembled gradients: sum_m (i m gF(m)) gG(-m).
cplx bracket_pairing(const std::vector<cplx>& gf, const std::vector<cplx>& gg,
                     int m) {
  cplx acc{0.0, 0.0};
  for (int k = -m; k <= m; ++k) {
    cplx dgf = cplx{0.0, double(k)} * gf[static_cast<size_t>(m + k)];
    acc += dgf * gg[static_cast<size_t>(m - k)];
  }
  return acc;
}
}  // namespace

cplx poisson_bracket(const Functional& f, const Functional& g,
                     const RealPotential& u, double h_fd) {
  const int m = u.mode_cutoff();
  auto eval = [&](double h) {
    std::vector<cplx> gf = fd_gradient(f, u, h);
    std::vector<cplx> gg = fd_gradient(g, u, h);
    return bracket_pairing(gf, gg, m);
  };
  cplx coarse = eval(h_fd);
  cplx fine = eval(0.5 * h_fd);
  double scale = std::max({std::abs(coarse), std::abs(fine), 1e-12});
  if (std::abs(coarse - fine) > 0.1 * scale) {
    // Central differences are O(h^2): Richardson with ratio 2.
    return (4.0 * fine - coarse) / 3.0;
  }
  return fine;
}

}  // namespace bo
