#include "bo/lax.hpp"

#include <cmath>

#include "bo/birkhoff.hpp"
#include "bo/errors.hpp"

namespace bo {

namespace {
constexpr double kConvergedTol = 1e-8;   // N vs 2N eigenvalue agreement
constexpr double kPhaseTol = 1e-12;      // shift product considered zero below
}  // namespace

LaxMatrix build_lax_matrix(const RealPotential& u, const GridSpec& grid) {
  grid.validate();
  if (u.mode_cutoff() > grid.mode_cutoff)
    throw DimensionError("build_lax_matrix: potential exceeds grid cutoff");
  const int n = grid.hardy_dim;
  const int m = u.mode_cutoff();
  Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    L(j, j) = cplx{double(j) - u.mean(), 0.0};
    // Fill the lower triangle and mirror it, so Hermiticity is bitwise.
    int khi = j - 1;
    int klo = j - m < 0 ? 0 : j - m;
    for (int k = klo; k <= khi; ++k) {
      cplx v = -u.coef(j - k);
      L(j, k) = v;
      L(k, j) = std::conj(v);
    }
  }
  return LaxMatrix{std::move(L), grid};
}

void eigen_decompose(const LaxMatrix& lax, Eigen::VectorXd& values,
                     Eigen::MatrixXcd& vectors) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(lax.entries);
  if (solver.info() != Eigen::Success)
    throw NumericalError("eigen_decompose: solver failed at N=" +
                         std::to_string(lax.entries.rows()) +
                         ", ||L|| = " + std::to_string(lax.entries.norm()));
  values = solver.eigenvalues();
  vectors = solver.eigenvectors();
}

Eigen::VectorXd eigenvalues_only(const LaxMatrix& lax) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      lax.entries, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalError("eigenvalues_only: solver failed");
  return solver.eigenvalues();
}

void normalize_phases(Eigen::MatrixXcd& vectors) {
  const int n = static_cast<int>(vectors.cols());
  if (n == 0) return;
  auto rotate_to = [&](int col, cplx phase) {
    double a = std::abs(phase);
    if (a > 0.0) vectors.col(col) *= phase / a;
  };
  // <1|f_0> = conj(f_0hat(0)); make it real nonnegative.
  if (std::abs(vectors(0, 0)) > kPhaseTol) {
    rotate_to(0, std::conj(vectors(0, 0)));
  }
  for (int c = 1; c < n; ++c) {
    // <f_c | e^{ix} f_{c-1}> = sum_{k>=1} f_c(k) conj(f_{c-1}(k-1))
    cplx ip{0.0, 0.0};
    for (int k = 1; k < n; ++k)
      ip += vectors(k, c) * std::conj(vectors(k - 1, c - 1));
    if (std::abs(ip) > kPhaseTol) {
      rotate_to(c, std::conj(ip));
      continue;
    }
    cplx ip1 = std::conj(vectors(0, c));  // <1|f_c>
    if (std::abs(ip1) > kPhaseTol) {
      rotate_to(c, ip1);
      continue;
    }
    // Both products vanish (closed gap): the coordinate is zero and the
    // phase carries nothing; still fix it deterministically.
    int imax = 0;
    vectors.col(c).cwiseAbs().maxCoeff(&imax);
    rotate_to(c, std::conj(vectors(imax, c)));
  }
}

namespace {
// Shared tail of the analysis once lambda/vectors/converged are known.
void fill_derived(SpectralData& s) {
  const int n = s.grid.hardy_dim;
  s.inner_one.resize(static_cast<size_t>(n));
  for (int c = 0; c < n; ++c)
    s.inner_one[static_cast<size_t>(c)] = std::conj(s.vectors(0, c));
  s.gamma = gaps_from_spectrum(s.lambda, s.converged);
  double gap_sum = 0.0;
  for (int p = 1; p <= s.converged; ++p)
    gap_sum += s.gamma[static_cast<size_t>(p - 1)];
  s.gap_tail = std::max(0.0, -s.lambda[0] - gap_sum);
  s.kappa.assign(s.gamma.size(), 0.0);
  for (int p = 1; p <= s.converged; ++p)
    s.kappa[static_cast<size_t>(p - 1)] = kappa(s, p);
}
}  // namespace

SpectralData spectral_analysis(const RealPotential& u, const GridSpec& grid) {
  SpectralData s;
  s.grid = grid;
  LaxMatrix lax = build_lax_matrix(u, grid);
  eigen_decompose(lax, s.lambda, s.vectors);
  normalize_phases(s.vectors);

  GridSpec wide = GridSpec::make(grid.mode_cutoff, 2 * grid.hardy_dim);
  Eigen::VectorXd lambda2 = eigenvalues_only(build_lax_matrix(u, wide));

  int kstar = -1;
  while (kstar + 1 < grid.hardy_dim &&
         std::abs(s.lambda[kstar + 1] - lambda2[kstar + 1]) < kConvergedTol)
    ++kstar;
  s.converged = kstar;
  fill_derived(s);
  return s;
}

SpectralData spectral_analysis_fixed(const RealPotential& u,
                                     const GridSpec& grid, int converged) {
  SpectralData s;
  s.grid = grid;
  LaxMatrix lax = build_lax_matrix(u, grid);
  eigen_decompose(lax, s.lambda, s.vectors);
  normalize_phases(s.vectors);
  s.converged = std::min(converged, grid.hardy_dim - 1);
  fill_derived(s);
  return s;
}

SpectralData spectral_analysis_auto(const RealPotential& u, int mode_cutoff,
                                    int requested_gaps) {
  int n = 2 * mode_cutoff;
  if (n < 2 * requested_gaps) n = 2 * requested_gaps;
  if (n < 32) n = 32;
  int best_converged = -1;
  double best_tail = std::numeric_limits<double>::infinity();
  while (true) {
    // The internal N-vs-2N probe means the hard cap N <= 4096 limits n to
    // half of that.
    if (2 * n > 4096)
      throw TruncationError(
          "spectral_analysis_auto: converged range " +
          std::to_string(best_converged) + " of requested " +
          std::to_string(requested_gaps) + " at hard cap N=4096 (gap tail " +
          std::to_string(best_tail) + "); potential too rough");
    SpectralData s = spectral_analysis(u, GridSpec::make(mode_cutoff, n));
    if (s.converged >= requested_gaps && s.gap_tail < 1e-9) return s;
    best_converged = s.converged;
    best_tail = s.gap_tail;
    n *= 2;
  }
}

HardyVector resolvent_solve(const LaxMatrix& lax, cplx lambda,
                            const HardyVector& rhs,
                            const Eigen::VectorXd* spectrum) {
  const int n = static_cast<int>(lax.entries.rows());
  if (rhs.dim() != n)
    throw DimensionError("resolvent_solve: rhs dimension mismatch");
  if (spectrum) {
    double dist = std::numeric_limits<double>::infinity();
    for (int i = 0; i < spectrum->size(); ++i)
      dist = std::min(dist, std::abs(lambda + cplx((*spectrum)[i], 0.0)));
    if (dist < 1e-8)
      throw NumericalError("resolvent_solve: lambda within 1e-8 of -spec(L)");
  }
  Eigen::MatrixXcd shifted = lax.entries;
  shifted.diagonal().array() += lambda;
  Eigen::VectorXcd b(n);
  for (int j = 0; j < n; ++j) b[j] = rhs[j];
  Eigen::VectorXcd w = shifted.partialPivLu().solve(b);
  double resid = (shifted * w - b).norm();
  double scale = b.norm();
  if (!(resid <= 1e-10 * (scale > 0.0 ? scale : 1.0)))
    throw NumericalError("resolvent_solve: residual " + std::to_string(resid) +
                         " exceeds 1e-10 ||rhs||; lambda near spectrum?");
  HardyVector out(n);
  for (int j = 0; j < n; ++j) out[j] = w[j];
  return out;
}

cplx generating_function_resolvent(const RealPotential& u, cplx lambda,
                                   const GridSpec& grid) {
  LaxMatrix lax = build_lax_matrix(u, grid);
  HardyVector one(grid.hardy_dim);
  one[0] = cplx{1.0, 0.0};
  HardyVector w = resolvent_solve(lax, lambda, one);
  // <w|1> picks the zeroth coefficient.
  return w[0];
}

}  // namespace bo
