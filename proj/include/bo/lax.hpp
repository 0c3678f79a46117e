// Truncated Lax operator of the Benjamin-Ono equation on the torus:
// L_u = -i d/dx - T_u acting on the Hardy space, represented on the basis
// e^{ijx}, j = 0..N-1, as L[j][k] = j delta_{jk} - uhat(j-k).
//
// Eigenvalues are conserved by the flow; consecutive ones are separated by
// at least 1, and the excess gamma_n = lambda_n - lambda_{n-1} - 1 >= 0
// carries the action variables of the integrable structure.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "bo/fourier.hpp"
#include "bo/grid.hpp"

namespace bo {

struct LaxMatrix {
  Eigen::MatrixXcd entries;
  GridSpec grid;
};

// Spectrum, phase-normalized eigenvectors, and derived gap data.
// Quantities indexed by n are trustworthy only for n <= converged, the
// largest index whose eigenvalue agrees between dimensions N and 2N to 1e-8.
struct SpectralData {
  GridSpec grid;
  Eigen::VectorXd lambda;             // ascending eigenvalues, size N
  Eigen::MatrixXcd vectors;           // unit-norm eigenvector columns
  std::vector<cplx> inner_one;        // <1|f_n>, size N
  std::vector<double> gamma;          // gamma[n-1] = lambda_n - lambda_{n-1} - 1
  std::vector<double> kappa;          // kappa[n-1], filled for n <= converged
  int converged = 0;                  // k*
  double gap_tail = 0.0;              // max(0, -lambda_0 - sum_{n<=k*} gamma_n)
};

// Builds the Hermitian truncation; the mean of u is kept (L_u = L_{u-c} - c).
LaxMatrix build_lax_matrix(const RealPotential& u, const GridSpec& grid);

// Raw ascending eigen-decomposition of a Hermitian Lax matrix.
void eigen_decompose(const LaxMatrix& lax, Eigen::VectorXd& values,
                     Eigen::MatrixXcd& vectors);
Eigen::VectorXd eigenvalues_only(const LaxMatrix& lax);

// Deterministic phase fixing: <1|f_0> >= 0 and <f_n|e^{ix} f_{n-1}> >= 0;
// falls back to <1|f_n> >= 0 when the shift product vanishes, and to a
// largest-entry-positive convention when both do (then zeta_n = 0 anyway and
// the phase carries no information).
void normalize_phases(Eigen::MatrixXcd& vectors);

// Full pipeline: eigen-decompose at N and 2N, locate the converged range,
// normalize phases, and fill gaps, multipliers and <1|f_n>.
SpectralData spectral_analysis(const RealPotential& u, const GridSpec& grid);

// Doubles N until the converged range covers `requested_gaps` (cap N = 4096).
SpectralData spectral_analysis_auto(const RealPotential& u, int mode_cutoff,
                                    int requested_gaps);

// Single-N pass that trusts a converged range established earlier (used in
// Newton sweeps / trajectory scans, where the doubling check would dominate).
SpectralData spectral_analysis_fixed(const RealPotential& u,
                                     const GridSpec& grid, int converged);

// Solves (L + lambda) w = rhs; refuses lambda within 1e-8 of -spec(L) when a
// spectrum is supplied, and checks the residual against 1e-10 ||rhs||.
HardyVector resolvent_solve(const LaxMatrix& lax, cplx lambda,
                            const HardyVector& rhs,
                            const Eigen::VectorXd* spectrum = nullptr);

// H_lambda(u) = <(L_u + lambda)^{-1} 1 | 1> evaluated through the resolvent.
cplx generating_function_resolvent(const RealPotential& u, cplx lambda,
                                   const GridSpec& grid);

}  // namespace bo
