// File formats: coefficient / spectrum / Birkhoff / trajectory CSVs and the
// JSON run summaries. Numbers are written with 17 significant digits so a
// round-trip is exact.
#pragma once

#include <string>
#include <vector>

#include "bo/birkhoff.hpp"
#include "bo/fourier.hpp"
#include "bo/lax.hpp"
#include "bo/pde.hpp"

namespace bo::io {

// Header `# mode,re,im`, one row per mode n = -M..M.
void write_coefficients(const std::string& path, const RealPotential& u);
RealPotential read_coefficients(const std::string& path);

// Header `# n,lambda,gamma,kappa,re_inner,im_inner`; gamma/kappa are blank
// for n = 0 and kappa beyond the converged range.
void write_spectrum(const std::string& path, const SpectralData& s);

// Header `# n,re_zeta,im_zeta,action,gamma,kappa`.
void write_birkhoff(const std::string& path, const BirkhoffSeq& z,
                    const SpectralData* s = nullptr);
BirkhoffSeq read_birkhoff(const std::string& path);

// Header `# t,n,re_zeta,im_zeta`, one block per sample time.
void write_zeta_trajectory(const std::string& path,
                           const std::vector<double>& times,
                           const std::vector<BirkhoffSeq>& zs);

// Header `# t,n,re,im` for PDE coefficient trajectories.
void write_state_trajectory(const std::string& path,
                            const std::vector<PdeState>& states);

// Potential samples on a uniform grid, header `# x,v`.
void write_samples(const std::string& path, const RealPotential& u,
                   int num_points);

void ensure_directory(const std::string& dir);

}  // namespace bo::io
