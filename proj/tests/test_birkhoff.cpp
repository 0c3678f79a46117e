#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bo/birkhoff.hpp"
#include "bo/inverse.hpp"
#include "bo/sampling.hpp"

using bo::cplx;

namespace {
bo::SpectralData one_gap_data(double q, int m = 48, int n = 128) {
  return bo::spectral_analysis(bo::one_gap_potential(q, m),
                               bo::GridSpec::make(m, n));
}
}  // namespace

TEST_CASE("gaps from spectrum") {
  Eigen::VectorXd lam(5);
  lam << 0.0, 1.0, 2.0, 3.0, 4.0;
  for (double g : bo::gaps_from_spectrum(lam)) CHECK(g == 0.0);

  // tiny negative values clamp, larger ones throw
  lam << 0.0, 1.0 - 5e-11, 2.0, 3.0, 4.0;
  CHECK(bo::gaps_from_spectrum(lam, 4)[0] == 0.0);
  lam << 0.0, 1.0 - 5e-9, 2.0, 3.0, 4.0;
  CHECK_THROWS_AS((void)bo::gaps_from_spectrum(lam, 4), bo::TruncationError);

  bo::SpectralData s = one_gap_data(0.5);
  CHECK(s.gamma[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-8));
  for (int n = 2; n <= 10; ++n) CHECK(s.gamma[static_cast<size_t>(n - 1)] <= 1e-9);

  bo::SpectralData s9 = one_gap_data(0.9, 320, 768);
  CHECK(s9.gamma[0] == doctest::Approx(0.81 / 0.19).epsilon(1e-6));
}

TEST_CASE("kappa closed forms") {
  // u = 0: kappa_n = 1/n.
  bo::RealPotential zero(4);
  bo::SpectralData s0 = bo::spectral_analysis(zero, bo::GridSpec::make(4, 32));
  for (int n = 1; n <= 8; ++n)
    CHECK(bo::kappa(s0, n) == doctest::Approx(1.0 / n).epsilon(1e-12));

  bo::SpectralData s = one_gap_data(0.5);
  CHECK(bo::kappa(s, 1) == doctest::Approx(0.75).epsilon(1e-8));
  CHECK(bo::kappa(s, 2) == doctest::Approx(4.0 / 7.0).epsilon(1e-7));
  CHECK_THROWS_AS((void)bo::kappa(s, s.converged + 1), bo::TruncationError);
}

TEST_CASE("birkhoff coordinates") {
  bo::GridSpec g = bo::GridSpec::make(8, 64);
  bo::RealPotential zero(8);
  bo::BirkhoffSeq z0 = bo::birkhoff_coordinates(zero, g);
  for (const auto& z : z0.data()) CHECK(std::abs(z) < 1e-12);

  bo::BirkhoffSeq z = bo::birkhoff_coordinates(one_gap_data(0.5));
  CHECK(std::norm(z.at(1)) == doctest::Approx(1.0 / 3.0).epsilon(1e-7));
  for (int n = 2; n <= 8; ++n) CHECK(std::norm(z.at(n)) <= 1e-8);
  // The shift-positivity normalization makes zeta_1 of a one-gap potential
  // real and negative: zeta_1 = -q / sqrt(1-q^2).
  CHECK(z.at(1).real() == doctest::Approx(-0.5 / std::sqrt(0.75)).epsilon(1e-7));
  CHECK(z.at(1).imag() == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("linearization: zeta_n ~ -uhat(n)/sqrt(n) for small u") {
  const double eps = 1e-3;
  bo::RealPotential u(4);
  u.set_coef(1, cplx{eps, 0.0});  // 2 eps cos x
  bo::BirkhoffSeq z = bo::birkhoff_coordinates(u, bo::GridSpec::make(4, 48));
  CHECK(std::abs(z.at(1) - cplx{-eps, 0.0}) < 0.01 * eps);

  bo::RealPotential w = bo::random_smooth_potential(77, 3, 0.01);
  bo::BirkhoffSeq zw = bo::birkhoff_coordinates(w, bo::GridSpec::make(3, 48));
  for (int n = 1; n <= 3; ++n) {
    cplx predicted = -w.coef(n) / std::sqrt(double(n));
    CHECK(std::abs(zw.at(n) - predicted) < 0.02 * std::abs(predicted));
  }
}

TEST_CASE("|zeta_n|^2 = gamma_n on the converged range") {
  bo::RealPotential u = bo::random_smooth_potential(10, 8, 1.6);
  bo::SpectralData s = bo::spectral_analysis(u, bo::GridSpec::make(8, 160));
  bo::BirkhoffSeq z = bo::birkhoff_coordinates(s);
  for (int n = 1; n <= z.count(); ++n) {
    double gamma = s.gamma[static_cast<size_t>(n - 1)];
    if (gamma < 1e-10) continue;
    CHECK(std::norm(z.at(n)) == doctest::Approx(gamma).epsilon(1e-7));
  }
}

TEST_CASE("generating function: product equals resolvent") {
  bo::RealPotential u = bo::random_smooth_potential(12, 6, 1.1);
  bo::GridSpec g = bo::GridSpec::make(6, 128);
  bo::SpectralData s = bo::spectral_analysis(u, g);
  for (cplx lambda : {cplx{0.0, 1.0}, cplx{1.0, 1.0}, cplx{3.0, 0.0}}) {
    cplx prod = bo::generating_function_product(s, lambda);
    cplx res = bo::generating_function_resolvent(u, lambda, g);
    CHECK(std::abs(prod - res) <= 1e-8 * std::abs(res));
  }
}

TEST_CASE("generating function closed forms") {
  bo::RealPotential zero(4);
  bo::SpectralData s0 = bo::spectral_analysis(zero, bo::GridSpec::make(4, 32));
  CHECK(std::abs(bo::generating_function_product(s0, cplx{2.0, 0.0}) -
                 cplx{0.5, 0.0}) < 1e-12);
  CHECK(std::abs(bo::generating_function_product(one_gap_data(0.5), {2.0, 0.0}) -
                 cplx{8.0 / 15.0, 0.0}) < 1e-8);
}

TEST_CASE("weighted norm") {
  bo::BirkhoffSeq z0(4);
  CHECK(bo::weighted_norm(z0, 1.3) == 0.0);
  bo::BirkhoffSeq z1(3);
  z1.at(1) = cplx{1.0, 0.0};
  CHECK(bo::weighted_norm(z1, -2.0) == doctest::Approx(1.0));
  CHECK(bo::weighted_norm(z1, 3.0) == doctest::Approx(1.0));

  bo::BirkhoffSeq zg = bo::birkhoff_coordinates(one_gap_data(0.5));
  CHECK(bo::weighted_norm(zg, 0.5) ==
        doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-7));
}

TEST_CASE("torus distance") {
  bo::BirkhoffSeq z(2);
  z.at(1) = cplx{0.6, 0.8};
  z.at(2) = cplx{0.0, -0.25};
  std::vector<double> own = z.moduli();
  CHECK(bo::torus_distance(z, own, 0.2) == 0.0);

  bo::BirkhoffSeq z1(2);
  z1.at(1) = cplx{1.0, 0.0};
  std::vector<double> target{2.0, 0.0};
  CHECK(bo::torus_distance(z1, target, 0.0) == doctest::Approx(1.0));

  std::vector<double> wrong_len{1.0};
  CHECK_THROWS_AS((void)bo::torus_distance(z1, wrong_len, 0.0),
                  bo::DimensionError);

  // Translation leaves moduli invariant.
  bo::RealPotential u = bo::random_smooth_potential(21, 6, 0.9);
  bo::GridSpec g = bo::GridSpec::make(6, 96);
  bo::BirkhoffSeq za = bo::birkhoff_coordinates(u, g);
  bo::BirkhoffSeq zb = bo::birkhoff_coordinates(u.translated(0.73), g);
  std::vector<double> ma = za.moduli();
  ma.resize(static_cast<size_t>(zb.count()), 0.0);
  CHECK(bo::torus_distance(zb, ma, 0.0) <= 1e-8);
}

TEST_CASE("trace formula") {
  bo::GridSpec g = bo::GridSpec::make(8, 96);
  bo::RealPotential zero(8);
  bo::TraceCheck c0 = bo::trace_formula_check(zero, g);
  CHECK(c0.lhs == 0.0);
  CHECK(c0.rhs <= 1e-20);

  // One-gap: ||u||^2 = 2 q^2/(1-q^2) = 2 gamma_1.
  bo::TraceCheck c1 =
      bo::trace_formula_check(bo::one_gap_potential(0.5, 48),
                              bo::GridSpec::make(48, 128));
  CHECK(c1.lhs == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(c1.relative_error < 1e-7);

  bo::TraceCheck c2 = bo::trace_formula_check(
      bo::random_smooth_potential(3, 8, 1.9), bo::GridSpec::make(8, 160));
  CHECK(c2.relative_error < 1e-7);
}

TEST_CASE("poisson brackets at a small smooth potential") {
  bo::RealPotential u = bo::random_smooth_potential(3, 4, 0.1);
  bo::GridSpec g = bo::GridSpec::make(4, 48);
  auto zeta = [&](int n, bool conj) {
    return bo::Functional([&, n, conj](const bo::RealPotential& w) {
      cplx z = bo::birkhoff_coordinates(w, g).at(n);
      return conj ? std::conj(z) : z;
    });
  };

  cplx b11 = bo::poisson_bracket(zeta(1, false), zeta(1, true), u);
  CHECK(std::abs(b11 - cplx{0.0, -1.0}) < 5e-3);

  cplx b12 = bo::poisson_bracket(zeta(1, false), zeta(2, true), u);
  CHECK(std::abs(b12) < 5e-3);

  cplx holo = bo::poisson_bracket(zeta(1, false), zeta(2, false), u);
  CHECK(std::abs(holo) < 5e-3);

  // Antisymmetry degenerates on the diagonal: {F, F} = 0 up to FD noise.
  bo::Functional h0 = [&](const bo::RealPotential& w) {
    double n = bo::sobolev_norm(w, 0.0);
    return cplx{0.5 * n * n, 0.0};
  };
  CHECK(std::abs(bo::poisson_bracket(h0, h0, u)) < 1e-10);

  // Actions commute at a one-gap potential.
  bo::RealPotential og = bo::one_gap_potential(0.3, 24);
  bo::GridSpec gg = bo::GridSpec::make(24, 80);
  auto action = [&](int n) {
    return bo::Functional([&, n](const bo::RealPotential& w) {
      return cplx{std::norm(bo::birkhoff_coordinates(w, gg).at(n)), 0.0};
    });
  };
  CHECK(std::abs(bo::poisson_bracket(action(1), action(2), og)) < 5e-4);
}

TEST_CASE("fd gradient handles non-finite values") {
  bo::RealPotential u = bo::random_smooth_potential(1, 3, 0.1);
  bo::Functional bad = [](const bo::RealPotential&) {
    return cplx{std::numeric_limits<double>::quiet_NaN(), 0.0};
  };
  CHECK_THROWS_AS((void)bo::fd_gradient(bad, u, 1e-5), bo::NumericalError);
}
