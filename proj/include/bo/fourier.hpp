// Fourier-side primitives on the torus: coefficient containers, the
// normalized inner product, Sobolev norms, Hilbert transform, Hardy
// projection, Toeplitz application, and coefficient/sample conversion.
//
// Conventions: f = sum_n fhat(n) e^{inx} with
// fhat(n) = (1/2pi) int_0^{2pi} f e^{-inx} dx, and
// <f|g> = (1/2pi) int f conj(g) dx = sum_n fhat(n) conj(ghat(n)).
#pragma once

#include <complex>
#include <span>
#include <vector>

#include "bo/errors.hpp"
#include "bo/grid.hpp"

namespace bo {

using cplx = std::complex<double>;

// Real-valued torus function stored through its n >= 0 coefficients; the
// negative side is conj-mirrored on access, so reality holds by construction.
class RealPotential {
 public:
  RealPotential() = default;
  explicit RealPotential(int mode_cutoff)
      : m_(mode_cutoff), pos_(static_cast<size_t>(mode_cutoff) + 1, cplx{0.0, 0.0}) {
    if (mode_cutoff < 0) throw DimensionError("RealPotential: negative cutoff");
  }

  int mode_cutoff() const { return m_; }

  cplx coef(int n) const {
    int a = n < 0 ? -n : n;
    if (a > m_) return {0.0, 0.0};
    return n >= 0 ? pos_[a] : std::conj(pos_[a]);
  }

  // Sets uhat(n) and uhat(-n) = conj(value) in one go; n = 0 must be real.
  void set_coef(int n, cplx value) {
    int a = n < 0 ? -n : n;
    if (a > m_) throw DimensionError("RealPotential::set_coef: mode beyond cutoff");
    if (a == 0) {
      pos_[0] = cplx{value.real(), 0.0};
    } else {
      pos_[a] = n >= 0 ? value : std::conj(value);
    }
  }

  double mean() const { return pos_.empty() ? 0.0 : pos_[0].real(); }
  void set_mean(double c) { pos_[0] = cplx{c, 0.0}; }

  RealPotential zero_mean() const {
    RealPotential out = *this;
    out.set_mean(0.0);
    return out;
  }

  // Returns a copy truncated or zero-extended to a new cutoff.
  RealPotential resized(int new_cutoff) const {
    RealPotential out(new_cutoff);
    int m = new_cutoff < m_ ? new_cutoff : m_;
    for (int n = 0; n <= m; ++n) out.pos_[n] = pos_[n];
    return out;
  }

  // u(x + tau): multiplies uhat(n) by e^{in tau}.
  RealPotential translated(double tau) const;

  bool operator==(const RealPotential&) const = default;

 private:
  int m_ = 0;
  std::vector<cplx> pos_;  // pos_[n] = uhat(n), n = 0..M
};

// Element of the truncated Hardy space: only frequencies 0..N-1 present.
class HardyVector {
 public:
  HardyVector() = default;
  explicit HardyVector(int dim) : a_(static_cast<size_t>(dim), cplx{0.0, 0.0}) {
    if (dim < 1) throw DimensionError("HardyVector: dimension must be positive");
  }
  explicit HardyVector(std::vector<cplx> coeffs) : a_(std::move(coeffs)) {}

  int dim() const { return static_cast<int>(a_.size()); }
  cplx& operator[](int j) { return a_[static_cast<size_t>(j)]; }
  const cplx& operator[](int j) const { return a_[static_cast<size_t>(j)]; }
  const std::vector<cplx>& coeffs() const { return a_; }

 private:
  std::vector<cplx> a_;
};

// <f|g> = sum fhat(n) conj(ghat(n)); truncations must match.
cplx inner(const HardyVector& f, const HardyVector& g);
cplx inner(const RealPotential& f, const RealPotential& g);

// (sum <n>^{2s} |fhat(n)|^2)^{1/2}, <n> = max(1, |n|).
double sobolev_norm(const RealPotential& f, double s);
double sobolev_norm(const HardyVector& f, double s);

// Coefficient-wise multiplication by -i sign(n), sign(0) = 0.
RealPotential hilbert_transform(const RealPotential& f);

// Keeps n >= 0 coefficients. hardy_dim <= 0 selects M+1 (all stored modes).
HardyVector hardy_project(const RealPotential& f, int hardy_dim = 0);

// (T_u f)_j = sum_k uhat(j-k) f_k restricted to 0 <= j < dim(f).
HardyVector toeplitz_apply(const RealPotential& u, const HardyVector& f);

// Samples f at x_j = 2pi j / P. Requires P >= 2M+1 so analyze() inverts it.
std::vector<double> synthesize(const RealPotential& f, int num_points);

// Trigonometric interpolation coefficients of real samples, truncated at M.
RealPotential analyze(std::span<const double> samples, int mode_cutoff);

}  // namespace bo
