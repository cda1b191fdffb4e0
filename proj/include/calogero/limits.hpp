#pragma once

#include "calogero/poly.hpp"
#include "calogero/scalars.hpp"

#include <complex>
#include <string>
#include <vector>

namespace calogero {

// Complex log-gamma, Lanczos approximation with reflection for Re(z) < 1/2.
std::complex<double> log_gamma(std::complex<double> z);

// Stirling form with Bernoulli corrections; validation partner for |z| > 10.
std::complex<double> log_gamma_stirling(std::complex<double> z);

// Parameters of the deformed weights; omega = varpi + varpiPrime and
// g1 = gg1 + gg1Prime in the limit.
struct BetaParams {
  double varpi = 0.5;
  double varpiPrime = 0.5;
  double gg1 = 0.0;       // family B
  double gg1Prime = 0.0;  // family B
  double g0 = 0.0;
  double beta = 0.01;
  int n = 1;
  void validate() const;  // beta in (1e-4, 1), varpi/varpiPrime > 0
};

double log_delta(double alpha, double beta);

// delta(alpha,beta) * |Gamma(1/(alpha beta^2) + i y/beta)|, computed in
// log-space; target exp(-alpha y^2/2).
double gamma_modulus_limit(double alpha, double y, double beta);

// |beta^a Gamma(a+b+iy/beta) / Gamma(b+iy/beta)|; target |y|^a.
double gamma_ratio_limit(double a, double b, double y, double beta);

// Deformed weight value at x (log-space internally).
double weight_beta(const std::vector<double>& x, const BetaParams& bp, Family family);

// Limit target of weight_beta.
double weight_limit_target(const std::vector<double>& x, const BetaParams& bp, Family family);

struct LimitReport {
  std::string check;
  double beta = 0;
  double maxAbsError = 0;
  double rateEstimate = 0;
  bool pass = false;
};

// Appendix domination bounds on a y-grid for one (alpha, beta).
std::vector<LimitReport> bound_checks(double alpha, double beta, int grid_points);

// Quadrature of p * weight_beta over the truncated box.
double integrate_weight_moment(const Poly& p, const BetaParams& bp, Family family,
                               double abs_tol);

}  // namespace calogero
