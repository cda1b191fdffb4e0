#include "doctest.h"

#include "calogero/limits.hpp"
#include "calogero/sympoly.hpp"

#include <cmath>

using namespace calogero;

TEST_CASE("lanczos agrees with stirling away from the origin") {
  std::vector<std::complex<double>> zs{{12.0, 0.0},  {15.0, 7.0},   {10.5, -40.0},
                                       {0.3, 25.0},  {200.0, 3.0},  {1e4, 1e2},
                                       {11.0, 11.0}, {50.0, -50.0}};
  for (auto z : zs) {
    if (std::abs(z) <= 10.0) continue;
    // compare log|Gamma|, which is branch-free
    double a = log_gamma(z).real();
    double b;
    if (z.real() >= 0.5) {
      b = log_gamma_stirling(z).real();
    } else {
      double log_abs_sin = 0.5 * std::log(std::pow(std::sin(M_PI * z.real()), 2) +
                                          std::pow(std::sinh(M_PI * z.imag()), 2));
      b = std::log(M_PI) - log_abs_sin - log_gamma_stirling(1.0 - z).real();
    }
    CHECK(std::abs(a - b) / std::abs(a) < 1e-10);
  }
  // spot value: Gamma(1/2+0i) = sqrt(pi)
  CHECK(std::exp(log_gamma({0.5, 0.0}).real()) == doctest::Approx(std::sqrt(M_PI)));
}

TEST_CASE("gamma modulus limit with quadratic rate") {
  double alpha = 1.0;
  CHECK(std::abs(gamma_modulus_limit(alpha, 0.0, 1e-2) - 1.0) < 1e-3);
  double target = std::exp(-0.5);
  CHECK(std::abs(gamma_modulus_limit(alpha, 1.0, 1e-2) - target) < 1e-3);
  for (double beta : {1e-1, 3.162277660168379e-2, 1e-2}) {
    double err = std::abs(gamma_modulus_limit(alpha, 1.0, beta) - target);
    CHECK(err / (beta * beta) < 2.0);  // bounded err/beta^2 along the ladder
  }
}

TEST_CASE("gamma ratio limit") {
  // a=1, b=1: exactly |beta + i y|
  for (double beta : {0.3, 0.05, 1e-2}) {
    for (double y : {0.5, 2.0, 7.0}) {
      double lhs = gamma_ratio_limit(1.0, 1.0, y, beta);
      CHECK(lhs == doctest::Approx(std::hypot(beta, y)).epsilon(1e-10));
    }
  }
  CHECK(gamma_ratio_limit(0.0, 0.3, 2.0, 0.1) == 1.0);
  double target = std::sqrt(2.0);
  for (double beta : {1e-1, 3.162277660168379e-2, 1e-2}) {
    double err = std::abs(gamma_ratio_limit(0.5, 0.0, 2.0, beta) - target);
    CHECK(err / beta < 1.0);  // O(beta) rate
  }
}

TEST_CASE("appendix bounds on a grid") {
  for (double beta : {0.9, 0.5, 0.1, 0.01}) {
    for (double alpha : {1.0, 0.5}) {
      auto reports = bound_checks(alpha, beta, 100);
      for (const auto& rep : reports) CHECK(rep.pass);
    }
  }
}

TEST_CASE("pointwise weight convergence, family A") {
  BetaParams bp;
  bp.n = 1;
  bp.varpi = 0.5;
  bp.varpiPrime = 0.5;
  std::vector<double> x{0.5};
  double target = std::exp(-0.25);
  double prev = 1e9;
  for (double beta : {1e-1, 3.162277660168379e-2, 1e-2}) {
    bp.beta = beta;
    double err = std::abs(weight_beta(x, bp, Family::A) - target);
    CHECK(err < prev);
    prev = err;
  }
  bp.beta = 1e-2;
  CHECK(std::abs(weight_beta(x, bp, Family::A) - target) / target < 1e-3);
  CHECK(weight_limit_target(x, bp, Family::A) == doctest::Approx(target));
}

TEST_CASE("pointwise weight convergence, family B with pair factors") {
  BetaParams bp;
  bp.n = 2;
  bp.varpi = 0.6;
  bp.varpiPrime = 0.4;
  bp.g0 = 1.0;
  bp.gg1 = 1.0;
  bp.gg1Prime = 0.0;
  std::vector<double> x{0.8, -0.35};
  double target = weight_limit_target(x, bp, Family::B);
  double prev = 1e9;
  for (double beta : {1e-1, 3.162277660168379e-2, 1e-2}) {
    bp.beta = beta;
    double err = std::abs(weight_beta(x, bp, Family::B) - target);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev / target < 1e-3);
}

TEST_CASE("moment convergence against the exact integrals") {
  BetaParams bp;
  bp.n = 1;
  bp.varpi = 0.5;
  bp.varpiPrime = 0.5;
  bp.beta = 1e-2;
  Poly one = Poly::constant(1, rat(1));
  double got = integrate_weight_moment(one, bp, Family::A, 1e-6);
  CHECK(std::abs(got - std::sqrt(M_PI)) < 1e-4);

  Poly x2 = msym({1}, 1, true);
  got = integrate_weight_moment(x2, bp, Family::A, 1e-6);
  CHECK(std::abs(got - std::sqrt(M_PI) / 2.0) < 1e-4);

  // n = 2, g0 = 1: integral of the full weight equals pi at omega = 1
  BetaParams bp2 = bp;
  bp2.n = 2;
  bp2.g0 = 1.0;
  Poly one2 = Poly::constant(2, rat(1));
  got = integrate_weight_moment(one2, bp2, Family::A, 1e-5);
  CHECK(std::abs(got - M_PI) / M_PI < 1e-3);
}

TEST_CASE("moment convergence family B in one variable") {
  BetaParams bp;
  bp.n = 1;
  bp.varpi = 0.5;
  bp.varpiPrime = 0.5;
  bp.gg1 = 1.0;
  bp.beta = 1e-2;
  Poly one = Poly::constant(1, rat(1));
  double got = integrate_weight_moment(one, bp, Family::B, 1e-6);
  // integral |x|^2 e^{-x^2} = sqrt(pi)/2
  CHECK(std::abs(got - std::sqrt(M_PI) / 2.0) / (std::sqrt(M_PI) / 2.0) < 1e-3);
}

TEST_CASE("beta floor is enforced") {
  BetaParams bp;
  bp.beta = 1e-5;
  CHECK_THROWS_AS(bp.validate(), std::invalid_argument);
}
