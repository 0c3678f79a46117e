#include "bo/inverse.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "bo/errors.hpp"
#include "bo/parallel.hpp"

namespace bo {

RealPotential one_gap_potential(double q, int mode_cutoff) {
  if (q < 0.0 || q >= 1.0)
    throw std::domain_error("one_gap_potential: q must lie in [0,1)");
  RealPotential u(mode_cutoff);
  if (q == 0.0) return u;
  if (std::pow(q, mode_cutoff) > 1e-14)
    std::fprintf(stderr,
                 "bo: one_gap_potential(q=%.6f, M=%d): tail q^M = %.2e above "
                 "1e-14, increase M\n",
                 q, mode_cutoff, std::pow(q, mode_cutoff));
  double p = 1.0;
  for (int n = 1; n <= mode_cutoff; ++n) {
    p *= q;
    u.set_coef(n, cplx{p, 0.0});
  }
  return u;
}

RealPotential linear_initializer(const BirkhoffSeq& z, int mode_cutoff) {
  RealPotential u(mode_cutoff);
  int top = std::min(mode_cutoff, z.count());
  for (int n = 1; n <= top; ++n)
    u.set_coef(n, -z.at(n) * std::sqrt(double(n)));
  return u;
}

namespace {

struct NewtonContext {
  int matched = 0;  // K
  GridSpec grid;
  int kstar = 0;
  const BirkhoffSeq* target = nullptr;
};

RealPotential unpack(const Eigen::VectorXd& x, int matched) {
  RealPotential u(matched);
  for (int n = 1; n <= matched; ++n)
    u.set_coef(n, cplx{x[n - 1], x[matched + n - 1]});
  return u;
}

// Residual r_i = Re(zeta_i - z_i), r_{K+i} = Im(zeta_i - z_i).
Eigen::VectorXd residual(const NewtonContext& ctx, const Eigen::VectorXd& x) {
  RealPotential u = unpack(x, ctx.matched);
  SpectralData s = spectral_analysis_fixed(u, ctx.grid, ctx.kstar);
  BirkhoffSeq z = birkhoff_coordinates(s);
  if (z.count() < ctx.matched)
    throw TruncationError("invert: converged range shrank below target length");
  Eigen::VectorXd r(2 * ctx.matched);
  for (int n = 1; n <= ctx.matched; ++n) {
    cplx d = z.at(n) - ctx.target->at(n);
    r[n - 1] = d.real();
    r[ctx.matched + n - 1] = d.imag();
  }
  return r;
}

double h_half_norm(const Eigen::VectorXd& r, int matched) {
  double acc = 0.0;
  for (int n = 1; n <= matched; ++n)
    acc += double(n) * (r[n - 1] * r[n - 1] +
                        r[matched + n - 1] * r[matched + n - 1]);
  return std::sqrt(acc);
}

}  // namespace

RealPotential invert(const BirkhoffSeq& z_target, const InverseSettings& settings,
                     const GridSpec& grid) {
  if (settings.max_iter < 1 || settings.tol <= 0.0 || settings.damping <= 0.0 ||
      settings.damping > 1.0)
    throw std::invalid_argument("invert: bad InverseSettings");
  if (z_target.count() == 0) return RealPotential(1);

  int last = 0;
  for (int n = 1; n <= z_target.count(); ++n)
    if (std::abs(z_target.at(n)) > 1e-12) last = n;
  if (last == 0) return RealPotential(std::min(z_target.count(), 4));
  // Every provided coordinate is matched (up to the cap): near-zero entries
  // are not noise to be skipped, they pin the higher Fourier coefficients
  // (a one-gap potential has zeta_n = 0 for n >= 2 yet uhat(n) = q^n != 0).
  int matched = std::min(z_target.count(), settings.max_coords);

  NewtonContext ctx;
  ctx.matched = matched;
  ctx.target = &z_target;

  // Working grid: the matrix must resolve K gaps with headroom.
  int n_dim = std::max(grid.hardy_dim, 2 * matched + 32);
  ctx.grid = GridSpec::make(matched, n_dim);

  // Establish the converged range at the initializer; escalate N if short.
  RealPotential guess = linear_initializer(z_target, matched);
  for (;;) {
    SpectralData probe = spectral_analysis(guess, ctx.grid);
    // Far gaps of later iterates are not re-checked for convergence, so keep
    // the product range close to what is actually matched.
    ctx.kstar = std::min(probe.converged, 2 * matched + 16);
    if (ctx.kstar >= matched) break;
    if (2 * ctx.grid.hardy_dim > 4096)
      throw TruncationError("invert: cannot converge " + std::to_string(matched) +
                            " coordinates below the N=4096 cap");
    ctx.grid = GridSpec::make(matched, 2 * ctx.grid.hardy_dim);
  }

  Eigen::VectorXd x(2 * matched);
  for (int n = 1; n <= matched; ++n) {
    x[n - 1] = guess.coef(n).real();
    x[matched + n - 1] = guess.coef(n).imag();
  }

  Eigen::VectorXd r = residual(ctx, x);
  double rnorm = h_half_norm(r, matched);
  double best = rnorm;

  const int dim = 2 * matched;
  Eigen::MatrixXd jac(dim, dim);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu;
  bool have_jacobian = false;

  auto rebuild_jacobian = [&]() {
    // Columns are independent eigensolves; the sweep parallelizes cleanly.
    parallel::for_range(dim, [&](int col) {
      Eigen::VectorXd xp = x, xm = x;
      xp[col] += settings.fd_step;
      xm[col] -= settings.fd_step;
      jac.col(col) =
          (residual(ctx, xp) - residual(ctx, xm)) / (2.0 * settings.fd_step);
    });
    lu.compute(jac);
    have_jacobian = true;
  };

  for (int it = 0; it < settings.max_iter; ++it) {
    if (rnorm < settings.tol) return unpack(x, matched).zero_mean();
    if (!have_jacobian) rebuild_jacobian();

    Eigen::VectorXd delta = lu.solve(-r);
    if (!delta.allFinite() || (jac * delta + r).norm() > 1e-6 * r.norm() + 1e-14) {
      // Singular Jacobian: retry once with Tikhonov regularization.
      Eigen::MatrixXd reg = jac.transpose() * jac;
      reg.diagonal().array() += 1e-10 * (1.0 + jac.squaredNorm());
      delta = reg.ldlt().solve(-jac.transpose() * r);
      if (!delta.allFinite())
        throw InverseError("invert: singular Jacobian", best);
    }

    double alpha = settings.damping;
    bool accepted = false;
    while (alpha > settings.damping / 1024.0) {
      Eigen::VectorXd x_try = x + alpha * delta;
      double rn_try = std::numeric_limits<double>::infinity();
      Eigen::VectorXd r_try;
      try {
        r_try = residual(ctx, x_try);
        rn_try = h_half_norm(r_try, matched);
      } catch (const TruncationError&) {
        // Step left the trust region of the truncation; shrink.
      }
      if (rn_try < rnorm) {
        double contraction = rn_try / rnorm;
        x = x_try;
        r = r_try;
        rnorm = rn_try;
        best = std::min(best, rnorm);
        accepted = true;
        // Reuse the factorized Jacobian while it still contracts well;
        // rebuilding it is by far the dominant cost.
        if (alpha < settings.damping || contraction > 0.25)
          have_jacobian = false;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      if (!have_jacobian)
        throw InverseError(
            "invert: stalled at residual " + std::to_string(rnorm), best);
      // A stale Jacobian may be the culprit; rebuild and try once more.
      have_jacobian = false;
    }
  }
  if (rnorm < settings.tol) return unpack(x, matched).zero_mean();
  throw InverseError("invert: no convergence after " +
                     std::to_string(settings.max_iter) + " iterations", best);
}

}  // namespace bo
