// Birkhoff coordinates (the nonlinear Fourier transform of the
// Benjamin-Ono equation): gap extraction, the multiplier product formula,
// zeta_n = <1|f_n> / sqrt(kappa_n), weighted sequence norms, torus distance,
// the trace formula, and finite-difference Poisson brackets for the Gardner
// structure.
#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <vector>

#include "bo/fourier.hpp"
#include "bo/lax.hpp"

namespace bo {

// Complex sequence (zeta_n)_{n>=1}; entry k stores zeta_{k+1}.
class BirkhoffSeq {
 public:
  BirkhoffSeq() = default;
  explicit BirkhoffSeq(std::vector<cplx> z) : z_(std::move(z)) {}
  explicit BirkhoffSeq(int count) : z_(static_cast<size_t>(count), cplx{0.0, 0.0}) {}

  int count() const { return static_cast<int>(z_.size()); }
  cplx& at(int n) { return z_[static_cast<size_t>(n - 1)]; }        // 1-based
  const cplx& at(int n) const { return z_[static_cast<size_t>(n - 1)]; }
  const std::vector<cplx>& data() const { return z_; }

  std::vector<double> actions() const {
    std::vector<double> a(z_.size());
    for (size_t i = 0; i < z_.size(); ++i) a[i] = std::norm(z_[i]);
    return a;
  }
  std::vector<double> moduli() const {
    std::vector<double> m(z_.size());
    for (size_t i = 0; i < z_.size(); ++i) m[i] = std::abs(z_[i]);
    return m;
  }

 private:
  std::vector<cplx> z_;
};

// gamma_n = lambda_n - lambda_{n-1} - 1 for n = 1..count-1 (count < 0 means
// the full vector). Values in (-1e-10, 0) are eigensolver roundoff and are
// clamped to 0; anything more negative signals a non-converged truncation.
std::vector<double> gaps_from_spectrum(const Eigen::VectorXd& lambda,
                                       int converged = -1);

// kappa_n = 1/(lambda_n - lambda_0) prod_{p != n, p <= k*}
// (1 - gamma_p / (lambda_p - lambda_n)); factors with gamma_p < 1e-12 are
// skipped, a nonpositive factor raises TruncationError.
double kappa(const SpectralData& s, int n);

// zeta_n(u) = <1|f_n> / sqrt(kappa_n) for n up to the converged range.
// A nonzero mean is removed internally (with a stderr note): the identities
// live on the zero-mean part.
BirkhoffSeq birkhoff_coordinates(const RealPotential& u, const GridSpec& grid);
BirkhoffSeq birkhoff_coordinates(const SpectralData& s);

// Product representation of the generating function,
// (1/(lambda_0 + lambda)) prod_{n <= k*} (1 - gamma_n/(lambda_n + lambda)).
cplx generating_function_product(const SpectralData& s, cplx lambda);

// h^s sequence norm (sum <n>^{2s} |z_n|^2)^{1/2}.
double weighted_norm(const BirkhoffSeq& z, double s);

// h^{1/2-s} distance from z to the torus with the given moduli:
// (sum <n>^{1-2s} (|z_n| - t_n)^2)^{1/2}.
double torus_distance(const BirkhoffSeq& z, std::span<const double> target_moduli,
                      double s);

struct TraceCheck {
  double lhs = 0.0;  // ||u||^2 of the zero-mean part
  double rhs = 0.0;  // 2 sum n |zeta_n|^2
  double relative_error = 0.0;
};
TraceCheck trace_formula_check(const RealPotential& u, const GridSpec& grid);

// Real or complex functional of a potential, evaluable at perturbed inputs.
using Functional = std::function<cplx(const RealPotential&)>;

// L^2 gradient of F assembled from central finite differences with respect
// to Re uhat(n), Im uhat(n), n = 1..M (duality <grad F | du> = dF(du)).
// Returned as coefficients grad(n), n = -M..M stored in a RealPotential-sized
// complex vector (index n + M); not conj-symmetric for complex F.
std::vector<cplx> fd_gradient(const Functional& f, const RealPotential& u,
                              double h_fd);

// Gardner bracket {F,G} = (1/2pi) int (d/dx grad F) grad G dx, extended
// complex-bilinearly; for real functionals this is inner(dx grad F, grad G).
// Uses step h_fd with a half-step estimate; when the two disagree by more
// than 10% the Richardson combination is returned.
cplx poisson_bracket(const Functional& f, const Functional& g,
                     const RealPotential& u, double h_fd = 1e-5);

}  // namespace bo
