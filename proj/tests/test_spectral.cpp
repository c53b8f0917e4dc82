#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spinbath/spectral.hpp"

using namespace spinbath;

TEST_CASE("spectral density pointwise values") {
  const SpectralDensity so = SuperOhmic{1.0, 1.0};
  CHECK(k_of(SuperOhmic{0.5, 0.5}, 0.0) == 0.0);
  CHECK(k_of(so, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));

  // On resonance the Brownian form collapses to lambda^2/(pi^2 gamma Omega).
  const SpectralDensity br = Brownian{1.0, 10.0, 0.01};
  CHECK(k_of(br, 10.0) ==
        doctest::Approx(1.0 / (M_PI * M_PI * 0.01 * 10.0)).epsilon(1e-12));
  CHECK(k_of(Brownian{1.0, 2.0, 0.05}, 0.0) == 0.0);
  CHECK_THROWS_AS(k_of(so, -1.0), std::domain_error);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(validate(SpectralDensity{SuperOhmic{-0.1, 1.0}}),
                  std::domain_error);
  CHECK_THROWS_AS(validate(SpectralDensity{SuperOhmic{0.1, 0.0}}),
                  std::domain_error);
  CHECK_THROWS_AS(validate(SpectralDensity{Brownian{-1.0, 1.0, 0.01}}),
                  std::domain_error);
  CHECK_THROWS_AS(validate(SpectralDensity{Brownian{1.0, -1.0, 0.01}}),
                  std::domain_error);
  CHECK_THROWS_AS(validate(SpectralDensity{Brownian{1.0, 1.0, 0.0}}),
                  std::domain_error);
  CHECK_NOTHROW(validate(SpectralDensity{SuperOhmic{0.0, 1.0}}));
}

TEST_CASE("quadrature reproduces Gamma-function integrals") {
  CHECK(integrate_semi_infinite([](double w) { return w * std::exp(-w); }, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(integrate_semi_infinite(
            [](double w) { return w * w * w * std::exp(-w); }, 1.0) ==
        doctest::Approx(6.0).epsilon(1e-9));
  CHECK(integrate_semi_infinite(
            [](double w) { return w * w * std::exp(-w / 0.5); }, 1.0) ==
        doctest::Approx(0.25).epsilon(1e-9));
  CHECK(integrate([](double w) { return std::cos(w); }, 0.0, M_PI / 2) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(integrate_semi_infinite([](double) { return 1.0; }, 0.0),
                  std::domain_error);
}

TEST_CASE("rc_params: Brownian is its own pre-image") {
  const RCParams rc = rc_params(Brownian{2.0, 8.0, 0.05});
  CHECK(rc.lambda == 2.0);
  CHECK(rc.omega == 8.0);
}

TEST_CASE("rc_params: super-Ohmic moments agree with direct quadrature") {
  // lambda^2 = (1/Omega) Int w K, Omega^2 = Int w^3 K / Int w K. For the
  // w^3 exp(-w/wc)/wc^2 family the moments are Gamma integrals:
  // Int w K = 24 a wc^3 and Int w^3 K = 720 a wc^5, so Omega = sqrt(30) wc.
  for (double alpha : {0.2, 0.5}) {
    for (double wc : {0.5, 1.0}) {
      const SpectralDensity sd = SuperOhmic{alpha, wc};
      const double m1 = integrate_semi_infinite(
          [&](double w) { return w * k_of(sd, w); }, 2.0 * wc);
      const double m3 = integrate_semi_infinite(
          [&](double w) { return w * w * w * k_of(sd, w); }, 2.0 * wc);
      CHECK(m1 == doctest::Approx(24.0 * alpha * std::pow(wc, 3)).epsilon(1e-8));
      CHECK(m3 == doctest::Approx(720.0 * alpha * std::pow(wc, 5)).epsilon(1e-8));
      const RCParams rc = rc_params(sd);
      CHECK(rc.omega == doctest::Approx(std::sqrt(m3 / m1)).epsilon(1e-8));
      CHECK(rc.lambda * rc.lambda ==
            doctest::Approx(m1 / rc.omega).epsilon(1e-8));
    }
  }
  CHECK(rc_params(SuperOhmic{0.0, 1.0}).lambda == 0.0);
  CHECK(rc_params(SuperOhmic{0.5, 1.0}).omega ==
        doctest::Approx(std::sqrt(30.0)).epsilon(1e-12));
}

TEST_CASE("rc_params: narrow Brownian peak reproduces its moments") {
  // The first moment converges on the half line and equals lambda^2 Omega;
  // the w^3 moment has a linearly divergent Lorentzian tail, so the moment
  // ratio is taken over a resonance window (1.5 Omega) where the peak
  // dominates for gamma <= 0.01.
  const double lambda = 1.5, omega0 = 10.0, gamma = 0.01;
  const SpectralDensity sd = Brownian{lambda, omega0, gamma};
  const double m1_full =
      integrate([&](double w) { return w * k_of(sd, w); }, 0.0, 20.0 * omega0);
  const double cut = 1.5 * omega0;
  const double m1 =
      integrate([&](double w) { return w * k_of(sd, w); }, 0.0, cut);
  const double m3 =
      integrate([&](double w) { return w * w * w * k_of(sd, w); }, 0.0, cut);
  const double omega_est = std::sqrt(m3 / m1);
  const double lambda_est = std::sqrt(m1_full / omega_est);
  CHECK(std::abs(omega_est - omega0) / omega0 <= 0.02);
  CHECK(std::abs(lambda_est - lambda) / lambda <= 0.02);
  CHECK(m1_full == doctest::Approx(lambda * lambda * omega0).epsilon(5e-3));
}

TEST_CASE("polaron coefficients: closed forms") {
  CHECK(polaron_ei(SuperOhmic{0.5, 0.5}, SuperOhmic{0.5, 0.5}) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(polaron_e0(SuperOhmic{0.0, 1.0}) == 0.0);
  CHECK(polaron_e0(SuperOhmic{0.3, 0.5}) == doctest::Approx(-0.3).epsilon(1e-12));
  CHECK(polaron_ei(SuperOhmic{0.2, 1.0}, SuperOhmic{0.45, 1.0}) ==
        doctest::Approx(2.0 * std::sqrt(0.2 * 0.45)).epsilon(1e-12));
  CHECK_THROWS_AS(polaron_e0(Brownian{1.0, 1.0, 0.01}), std::domain_error);
  CHECK_THROWS_AS(polaron_ei(SuperOhmic{0.3, 0.5}, SuperOhmic{0.3, 1.0}),
                  std::domain_error);
}

TEST_CASE("polaron coefficients: quadrature path agrees with closed forms") {
  for (double alpha : {0.1, 0.3, 0.5})
    for (double wc : {0.5, 1.0}) {
      const SpectralDensity a = SuperOhmic{alpha, wc};
      const SpectralDensity b = SuperOhmic{0.3, wc};
      CHECK(polaron_e0_quad(a) ==
            doctest::Approx(polaron_e0(a)).epsilon(1e-8));
      CHECK(polaron_ei_quad(a, b) ==
            doctest::Approx(polaron_ei(a, b)).epsilon(1e-8));
    }
}

TEST_CASE("dressing exponent: limits and monotonicity") {
  CHECK(dressing_exponent(SuperOhmic{0.0, 1.0}, 1.0) == 0.0);
  for (double alpha : {0.2, 0.5})
    for (double wc : {0.5, 1.0}) {
      // coth -> 1 at low temperature, leaving twice the bare coupling.
      const double phi = dressing_exponent(SuperOhmic{alpha, wc}, 1e4 / wc);
      CHECK(phi == doctest::Approx(2.0 * alpha).epsilon(1e-4));
    }
  const double lo = dressing_exponent(SuperOhmic{0.3, 0.5}, 10.0);
  const double hi_alpha = dressing_exponent(SuperOhmic{0.4, 0.5}, 10.0);
  const double hi_temp = dressing_exponent(SuperOhmic{0.3, 0.5}, 5.0);
  CHECK(hi_alpha >= lo);
  CHECK(hi_temp >= lo);
  CHECK_THROWS_AS(dressing_exponent(SuperOhmic{0.3, 0.5}, 0.0),
                  std::domain_error);
  CHECK_THROWS_AS(dressing_exponent(Brownian{1.0, 1.0, 0.01}, 1.0),
                  std::domain_error);
}

TEST_CASE("dressing exponent matches a trapezoid oracle") {
  const double alpha = 0.5, wc = 0.5, beta = 10.0;
  // Independent fixed-step evaluation of the same integrand.
  const double upper = 60.0 * wc;
  const long steps = 400000;
  const double h = upper / steps;
  double acc = 0.0;
  for (long k = 0; k <= steps; ++k) {
    const double w = k * h;
    const double f =
        k == 0 ? 2.0 * alpha / (beta * wc * wc)
                : alpha * w * std::exp(-w / wc) / (wc * wc) /
                      std::tanh(0.5 * beta * w);
    acc += (k == 0 || k == steps) ? 0.5 * f : f;
  }
  const double oracle = 2.0 * acc * h;
  CHECK(dressing_exponent(SuperOhmic{alpha, wc}, beta) ==
        doctest::Approx(oracle).epsilon(1e-7));
}

TEST_CASE("joint dressing identities") {
  const SpectralDensity a = SuperOhmic{0.3, 0.5};
  const SpectralDensity b = SuperOhmic{0.5, 0.5};
  const double beta = 10.0;

  // Equal baths: the difference mode cancels, so cc + ss = 1.
  const JointDressing eq = joint_dressing(a, a, beta, true);
  CHECK(eq.cc + eq.ss == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(eq.ss >= 0.0);
  CHECK(eq.cc > 0.0);
  CHECK(eq.cc - eq.ss <= 1.0);

  const JointDressing neq = joint_dressing(a, b, beta, true);
  CHECK(neq.cc + neq.ss <= 1.0 + 1e-12);
  CHECK(neq.cc - neq.ss > 0.0);

  // Uncorrelated baths factorize and carry no sine-sine correlation.
  const JointDressing cross = joint_dressing(a, b, beta, false);
  CHECK(cross.ss == 0.0);
  CHECK(cross.cc == doctest::Approx(std::exp(-dressing_exponent(a, beta)) *
                                    std::exp(-dressing_exponent(b, beta)))
                        .epsilon(1e-9));

  const JointDressing zero =
      joint_dressing(SpectralDensity{SuperOhmic{0.0, 0.5}},
                     SpectralDensity{SuperOhmic{0.0, 0.5}}, beta, true);
  CHECK(zero.cc == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(zero.ss == doctest::Approx(0.0).epsilon(1e-9));
}
