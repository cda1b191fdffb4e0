#include "calogero/limits.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace calogero {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// log(sin(pi z)) without overflow for large |Im z|.
std::complex<double> log_sin_pi(std::complex<double> z) {
  if (z.imag() < 0) return std::conj(log_sin_pi(std::conj(z)));
  // sin(pi z) = -exp(-i pi z) (1 - exp(2 i pi z)) / (2 i),  |exp(2 i pi z)| <= 1
  std::complex<double> i(0, 1);
  std::complex<double> e = std::exp(2.0 * i * kPi * z);
  return -i * kPi * z + std::log(1.0 - e) - std::log(2.0 * i);
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  static const double c[9] = {0.99999999999980993,  676.5203681218851,
                              -1259.1392167224028,  771.32342877765313,
                              -176.61502916214059,  12.507343278686905,
                              -0.13857109526572012, 9.9843695780195716e-6,
                              1.5056327351493116e-7};
  if (z.real() < 0.5) {
    // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z)
    return std::log(kPi) - log_sin_pi(z) - log_gamma(1.0 - z);
  }
  std::complex<double> zz = z - 1.0;
  std::complex<double> x = c[0];
  for (int k = 1; k < 9; ++k) x += c[k] / (zz + static_cast<double>(k));
  std::complex<double> t = zz + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (zz + 0.5) * std::log(t) - t + std::log(x);
}

std::complex<double> log_gamma_stirling(std::complex<double> z) {
  std::complex<double> lg = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi);
  std::complex<double> zi = 1.0 / z;
  std::complex<double> z2 = zi * zi;
  lg += zi * (1.0 / 12.0 + z2 * (-1.0 / 360.0 + z2 * (1.0 / 1260.0 - z2 / 1680.0)));
  return lg;
}

void BetaParams::validate() const {
  if (!(beta > 1e-4 && beta < 1.0))
    throw std::invalid_argument("beta must lie in (1e-4, 1)");
  if (!(varpi > 0) || !(varpiPrime > 0))
    throw std::invalid_argument("varpi and varpiPrime must be positive");
  if (g0 < 0 || gg1 < 0 || gg1Prime < 0)
    throw std::invalid_argument("couplings must be nonnegative");
  if (n < 1 || n > 8) throw std::invalid_argument("n out of range");
}

double log_delta(double alpha, double beta) {
  double b2a = beta * beta * alpha;
  return 0.5 * (1.0 - std::log(2.0 * kPi)) + (1.0 + std::log(b2a)) * (1.0 / b2a - 0.5);
}

double gamma_modulus_limit(double alpha, double y, double beta) {
  std::complex<double> z(1.0 / (alpha * beta * beta), y / beta);
  return std::exp(log_delta(alpha, beta) + log_gamma(z).real());
}

double gamma_ratio_limit(double a, double b, double y, double beta) {
  if (a == 0.0) return 1.0;
  std::complex<double> iy(b, y / beta);
  double lg = a * std::log(beta) + log_gamma(iy + a).real() - log_gamma(iy).real();
  return std::exp(lg);
}

namespace {

// 2 * Re log of the normalized pair/variable ratio |beta^a G(a+iu)/G(iu)|^2
double log_ratio_sq(double a, double b, double u, double beta) {
  if (a == 0.0) return 0.0;
  std::complex<double> base(b, u);
  return 2.0 * (a * std::log(beta) + log_gamma(base + a).real() - log_gamma(base).real());
}

}  // namespace

double weight_beta(const std::vector<double>& x, const BetaParams& bp, Family family) {
  bp.validate();
  if (static_cast<int>(x.size()) != bp.n)
    throw std::invalid_argument("weight_beta: dimension mismatch");
  double beta = bp.beta;
  double logw = 2.0 * bp.n * (log_delta(bp.varpi, beta) + log_delta(bp.varpiPrime, beta));
  for (int j = 0; j < bp.n; ++j) {
    std::complex<double> za(1.0 / (bp.varpi * beta * beta), x[static_cast<std::size_t>(j)] / beta);
    std::complex<double> zb(1.0 / (bp.varpiPrime * beta * beta), x[static_cast<std::size_t>(j)] / beta);
    logw += 2.0 * (log_gamma(za).real() + log_gamma(zb).real());
  }
  for (int j = 0; j < bp.n; ++j)
    for (int k = j + 1; k < bp.n; ++k) {
      double d = (x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(k)]) / beta;
      logw += log_ratio_sq(bp.g0, 0.0, d, beta);
      if (family == Family::B) {
        double s = (x[static_cast<std::size_t>(j)] + x[static_cast<std::size_t>(k)]) / beta;
        logw += log_ratio_sq(bp.g0, 0.0, s, beta);
      }
    }
  if (family == Family::B)
    for (int j = 0; j < bp.n; ++j) {
      double u = x[static_cast<std::size_t>(j)] / beta;
      logw += log_ratio_sq(bp.gg1, 0.0, u, beta);
      logw += log_ratio_sq(bp.gg1Prime, 0.5, u, beta);
    }
  return std::exp(logw);
}

double weight_limit_target(const std::vector<double>& x, const BetaParams& bp, Family family) {
  double omega = bp.varpi + bp.varpiPrime;
  double g1 = bp.gg1 + bp.gg1Prime;
  double val = 1.0;
  for (int j = 0; j < bp.n; ++j)
    for (int k = j + 1; k < bp.n; ++k) {
      double d = std::abs(x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(k)]);
      if (family == Family::B)
        d *= std::abs(x[static_cast<std::size_t>(j)] + x[static_cast<std::size_t>(k)]);
      val *= std::pow(d, 2.0 * bp.g0);
    }
  for (int j = 0; j < bp.n; ++j) {
    if (family == Family::B)
      val *= std::pow(std::abs(x[static_cast<std::size_t>(j)]), 2.0 * g1);
    val *= std::exp(-omega * x[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)]);
  }
  return val;
}

namespace {

double F_beta(double alpha, double beta, double y) {
  return (y / beta) * std::atan(alpha * beta * y) -
         std::log(1.0 + alpha * alpha * beta * beta * y * y) / (2.0 * alpha * beta * beta);
}

// integral of e^{-bt} |a - (1-e^{-at})/(1-e^{-t})| dt/t over (0, inf)
double ratio_bound_constant(double a, double b) {
  auto f = [&](double t) {
    if (t < 1e-9) return std::abs(a * (a - 1.0) / 2.0);  // limit of integrand/t * t
    double num = a - (1.0 - std::exp(-a * t)) / (1.0 - std::exp(-t));
    return std::exp(-b * t) * std::abs(num) / t;
  };
  // composite Simpson on (0, 60] is plenty at the accuracy needed here
  double h = 1e-3, acc = 0.0;
  for (double t = 0.0; t < 60.0; t += h)
    acc += (f(t) + 4.0 * f(t + h / 2) + f(t + h)) * h / 6.0;
  return acc;
}

}  // namespace

std::vector<LimitReport> bound_checks(double alpha, double beta, int grid_points) {
  if (!(beta > 0 && beta < 1)) throw std::invalid_argument("beta must be in (0,1)");
  std::vector<LimitReport> out;
  double G = std::exp(alpha * beta * beta / 6.0);
  const double slack = 1e-9;

  {  // modulus bound and exponential envelope
    LimitReport rep;
    rep.check = "gamma-modulus-bound";
    rep.beta = beta;
    rep.pass = true;
    for (int i = 0; i < grid_points; ++i) {
      double y = -30.0 + 60.0 * i / (grid_points - 1);
      double lhs = gamma_modulus_limit(alpha, y, beta);
      double env = std::exp(-F_beta(alpha, beta, y)) * G;
      if (lhs > env * (1.0 + slack)) rep.pass = false;
      rep.maxAbsError = std::max(rep.maxAbsError, lhs - env);
      double fenv = std::exp(-F_beta(alpha, beta, y));
      double cap = std::abs(y) < 1.0 / alpha ? 1.0 : std::exp(-std::abs(y) / 3.0);
      if (fenv > cap * (1.0 + slack)) rep.pass = false;
    }
    if (std::abs(F_beta(alpha, beta, 0.0)) > 1e-12) rep.pass = false;
    if (!(F_beta(alpha, beta, 1.0 / alpha) > 1.0 / (3.0 * alpha))) rep.pass = false;
    out.push_back(rep);
  }

  {  // integer-a ratio identity and polynomial envelope
    LimitReport rep;
    rep.check = "gamma-ratio-integer";
    rep.beta = beta;
    rep.pass = true;
    int a = 2;
    double b = 0.7;
    for (int i = 1; i < grid_points; ++i) {
      double y = 20.0 * i / (grid_points - 1);
      double lhs = gamma_ratio_limit(a, b, y, beta);
      double prod = 1.0;
      for (int m = 0; m < a; ++m)
        prod *= std::hypot((m + b) * beta, y);
      double rel = std::abs(lhs - prod) / prod;
      rep.maxAbsError = std::max(rep.maxAbsError, rel);
      if (rel > 1e-9) rep.pass = false;
      double env = std::pow((a + b) * (a + b) + y * y, a / 2.0);
      if (lhs > env * (1.0 + slack)) rep.pass = false;
    }
    out.push_back(rep);
  }

  {  // general-a polynomial envelope via the psi-integral constant
    LimitReport rep;
    rep.check = "gamma-ratio-envelope";
    rep.beta = beta;
    rep.pass = true;
    double a = 0.6, b = 0.8;
    double c = std::exp(ratio_bound_constant(a, b));
    for (int i = 1; i < grid_points; ++i) {
      double y = 20.0 * i / (grid_points - 1);
      double lhs = gamma_ratio_limit(a, b, y, beta);
      double env = std::pow(b * b + y * y, a / 2.0) * c;
      rep.maxAbsError = std::max(rep.maxAbsError, lhs - env);
      if (lhs > env * (1.0 + 1e-6)) rep.pass = false;
    }
    out.push_back(rep);
  }
  return out;
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double err = left + right - whole;
  if (depth <= 0 || std::abs(err) < 15.0 * tol) return left + right + err / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, tol / 2, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, tol / 2, depth - 1);
}

double integrate_1d(const std::function<double(double)>& f,
                    const std::vector<double>& knots, double tol) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    double a = knots[i], b = knots[i + 1];
    if (!(b > a)) continue;
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    acc += adaptive_simpson(f, a, b, fa, fm, fb, tol / (knots.size() - 1), 24);
  }
  return acc;
}

std::vector<double> box_knots(double R, double core, bool split_zero) {
  std::vector<double> k{-R, -core};
  if (split_zero) {
    k.push_back(-core / 2);
    k.push_back(0.0);
    k.push_back(core / 2);
  } else {
    k.push_back(0.0);
  }
  k.push_back(core);
  k.push_back(R);
  return k;
}

}  // namespace

double integrate_weight_moment(const Poly& p, const BetaParams& bp, Family family,
                               double abs_tol) {
  bp.validate();
  double omega = bp.varpi + bp.varpiPrime;
  double alpha_min = std::min(bp.varpi, bp.varpiPrime);
  double R = std::max(4.0 / std::sqrt(omega), 1.0 / alpha_min + 120.0);
  double core = 6.0 / std::sqrt(omega);
  bool splitz = family == Family::B;
  auto knots = box_knots(R, core, splitz);

  if (bp.n == 1) {
    auto f = [&](double x) {
      if (splitz && x == 0.0) return 0.0;
      return p.eval_double({x}) * weight_beta({x}, bp, family);
    };
    return integrate_1d(f, knots, abs_tol);
  }
  if (bp.n == 2) {
    auto outer = [&](double x1) {
      auto inner = [&](double x2) {
        if (x1 == x2 || (splitz && (x2 == 0.0 || x1 == -x2))) return 0.0;
        return p.eval_double({x1, x2}) * weight_beta({x1, x2}, bp, family);
      };
      return integrate_1d(inner, knots, abs_tol / (4.0 * R));
    };
    return integrate_1d(outer, knots, abs_tol);
  }
  throw std::invalid_argument("integrate_weight_moment: n <= 2 only");
}

}  // namespace calogero
