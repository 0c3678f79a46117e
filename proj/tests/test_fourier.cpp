#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bo/fourier.hpp"
#include "bo/sampling.hpp"
#include "oracles.hpp"

using bo::cplx;

namespace {
bo::RealPotential two_cos(int m = 4) {  // 2 cos x
  bo::RealPotential u(m);
  u.set_coef(1, cplx{1.0, 0.0});
  return u;
}
bo::RealPotential two_sin(int m = 4) {  // 2 sin x = -i e^{ix} + i e^{-ix}
  bo::RealPotential u(m);
  u.set_coef(1, cplx{0.0, -1.0});
  return u;
}
}  // namespace

TEST_CASE("inner products match quadrature") {
  bo::RealPotential one(4);
  one.set_mean(1.0);
  CHECK(bo::inner(one, one).real() == doctest::Approx(1.0).epsilon(1e-14));

  bo::HardyVector e1(8);
  e1[1] = cplx{1.0, 0.0};
  CHECK(bo::inner(e1, e1).real() == doctest::Approx(1.0).epsilon(1e-14));

  // (1/2pi) int 4 cos^2 = 2, pinned by quadrature.
  cplx q = oracle::quad_inner([](double x) { return cplx{2.0 * std::cos(x), 0.0}; },
                              [](double x) { return cplx{2.0 * std::cos(x), 0.0}; });
  CHECK(q.real() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(bo::inner(two_cos(), two_cos()).real() ==
        doctest::Approx(q.real()).epsilon(1e-14));

  bo::HardyVector f(4), g(5);
  CHECK_THROWS_AS((void)bo::inner(f, g), bo::DimensionError);
}

TEST_CASE("sobolev norms") {
  bo::RealPotential z(6);
  CHECK(bo::sobolev_norm(z, 0.3) == 0.0);
  CHECK(bo::sobolev_norm(two_cos(), 0.0) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  bo::RealPotential u(4);
  for (int n = 1; n <= 3; ++n) u.set_coef(n, cplx{1.0, 0.0});
  double expect = std::sqrt(2.0 * (1.0 + 0.25 + 1.0 / 9.0));
  CHECK(bo::sobolev_norm(u, -1.0) == doctest::Approx(expect).epsilon(1e-15));
}

TEST_CASE("norm monotone in s") {
  bo::RealPotential u = bo::random_smooth_potential(42, 12, 1.3);
  double prev = 0.0;
  for (double s : {-1.0, -0.5, 0.0, 0.25, 1.0}) {
    double v = bo::sobolev_norm(u, s);
    CHECK(v >= prev * (1.0 - 1e-15));
    prev = v;
  }
}

TEST_CASE("hilbert transform") {
  bo::RealPotential one(2);
  one.set_mean(1.0);
  CHECK(bo::sobolev_norm(bo::hilbert_transform(one), 0.0) == 0.0);

  // H(cos x) = sin x and H(sin x) = -cos x.
  bo::RealPotential c(2), s(2);
  c.set_coef(1, cplx{0.5, 0.0});
  s.set_coef(1, cplx{0.0, -0.5});
  bo::RealPotential hc = bo::hilbert_transform(c);
  CHECK(hc.coef(1).real() == doctest::Approx(0.0));
  CHECK(hc.coef(1).imag() == doctest::Approx(-0.5));  // = sin x
  bo::RealPotential hs = bo::hilbert_transform(s);
  CHECK(hs.coef(1).real() == doctest::Approx(-0.5));  // = -cos x
  CHECK(hs.coef(1).imag() == doctest::Approx(0.0));
}

TEST_CASE("hilbert involution: H(H(f)) = -(f - mean f)") {
  bo::RealPotential u = bo::random_smooth_potential(7, 10, 0.8);
  u.set_mean(0.37);
  bo::RealPotential hh = bo::hilbert_transform(bo::hilbert_transform(u));
  for (int n = 1; n <= 10; ++n) {
    CHECK(hh.coef(n).real() == doctest::Approx(-u.coef(n).real()).epsilon(1e-15));
    CHECK(hh.coef(n).imag() == doctest::Approx(-u.coef(n).imag()).epsilon(1e-15));
  }
  CHECK(hh.mean() == 0.0);
}

TEST_CASE("hardy projection") {
  bo::HardyVector p = bo::hardy_project(two_cos());
  CHECK(p[0] == cplx{0.0, 0.0});
  CHECK(p[1] == cplx{1.0, 0.0});  // Pi(2cos x) = e^{ix}

  bo::HardyVector ps = bo::hardy_project(two_sin());
  CHECK(ps[1].real() == doctest::Approx(0.0));
  CHECK(ps[1].imag() == doctest::Approx(-1.0));  // Pi(2sin x) = -i e^{ix}

  bo::RealPotential one(3);
  one.set_mean(1.0);
  CHECK(bo::hardy_project(one)[0] == cplx{1.0, 0.0});
}

TEST_CASE("toeplitz apply") {
  bo::HardyVector f(6);
  f[0] = cplx{1.0, 0.0};
  bo::RealPotential zero(4);
  bo::HardyVector tz = bo::toeplitz_apply(zero, f);
  for (int j = 0; j < 6; ++j) CHECK(std::abs(tz[j]) == 0.0);

  // u = 2cos x: T_u 1 = e^{ix}, T_u e^{ix} = 1 + e^{2ix}.
  bo::HardyVector t1 = bo::toeplitz_apply(two_cos(), f);
  CHECK(t1[0] == cplx{0.0, 0.0});
  CHECK(t1[1] == cplx{1.0, 0.0});
  bo::HardyVector e1(6);
  e1[1] = cplx{1.0, 0.0};
  bo::HardyVector t2 = bo::toeplitz_apply(two_cos(), e1);
  CHECK(t2[0] == cplx{1.0, 0.0});
  CHECK(t2[2] == cplx{1.0, 0.0});
}

TEST_CASE("toeplitz symmetry and linearity against dense oracle") {
  bo::RealPotential u = bo::random_smooth_potential(3, 5, 0.9);
  std::vector<cplx> symbol(11);
  for (int d = -5; d <= 5; ++d) symbol[static_cast<size_t>(d + 5)] = u.coef(d);

  bo::HardyVector f(12), g(12);
  for (int j = 0; j < 12; ++j) {
    f[j] = cplx{std::sin(1.0 + j), std::cos(2.0 * j)};
    g[j] = cplx{1.0 / (1.0 + j), -0.3 * j};
  }
  bo::HardyVector tf = bo::toeplitz_apply(u, f);
  std::vector<cplx> dense = oracle::toeplitz_dense(symbol, 5, f.coeffs());
  for (int j = 0; j < 12; ++j)
    CHECK(std::abs(tf[j] - dense[static_cast<size_t>(j)]) < 1e-13);

  // <T_u f | g> = <f | T_u g> for real u.
  cplx lhs = bo::inner(tf, g);
  cplx rhs = bo::inner(f, bo::toeplitz_apply(u, g));
  CHECK(std::abs(lhs - rhs) < 1e-13);

  // Linearity in f.
  bo::HardyVector fg(12);
  for (int j = 0; j < 12; ++j) fg[j] = f[j] + cplx{0.0, 2.0} * g[j];
  bo::HardyVector t_fg = bo::toeplitz_apply(u, fg);
  bo::HardyVector tg = bo::toeplitz_apply(u, g);
  for (int j = 0; j < 12; ++j)
    CHECK(std::abs(t_fg[j] - (tf[j] + cplx{0.0, 2.0} * tg[j])) < 1e-13);
}

TEST_CASE("synthesize / analyze") {
  // cos x on 8 points.
  bo::RealPotential c(1);
  c.set_coef(1, cplx{0.5, 0.0});
  std::vector<double> s = bo::synthesize(c, 8);
  for (int j = 0; j < 8; ++j)
    CHECK(s[static_cast<size_t>(j)] ==
          doctest::Approx(std::cos(2.0 * M_PI * j / 8.0)).epsilon(1e-14));

  bo::RealPotential z(4);
  for (double v : bo::synthesize(z, 16)) CHECK(v == 0.0);

  CHECK_THROWS_AS((void)bo::synthesize(bo::random_smooth_potential(1, 8, 1.0), 9),
                  bo::DimensionError);
}

TEST_CASE("analyze(synthesize(u)) is the identity on coefficients") {
  bo::RealPotential u = bo::random_smooth_potential(12345, 8, 1.7);
  u.set_mean(-0.21);
  std::vector<double> s = bo::synthesize(u, 64);
  bo::RealPotential back = bo::analyze(s, 8);
  for (int n = 0; n <= 8; ++n)
    CHECK(std::abs(back.coef(n) - u.coef(n)) < 1e-13 * (1.0 + std::abs(u.coef(n))));
}

TEST_CASE("reality is structural") {
  bo::RealPotential u(3);
  u.set_coef(-2, cplx{0.25, 0.5});
  CHECK(u.coef(2) == std::conj(u.coef(-2)));
  u.set_coef(0, cplx{1.5, 42.0});  // imaginary part of the mean is dropped
  CHECK(u.coef(0) == cplx{1.5, 0.0});
  CHECK_THROWS_AS(u.set_coef(4, cplx{1.0, 0.0}), bo::DimensionError);
}
