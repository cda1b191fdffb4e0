#include "calogero/scalars.hpp"

#include <cmath>
#include <sstream>

namespace calogero {

char family_char(Family f) { return f == Family::A ? 'A' : 'B'; }

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  throw std::invalid_argument("family must be A or B, got '" + s + "'");
}

void Params::validate() const {
  if (n < 1 || n > 8) throw std::invalid_argument("n must be in 1..8");
  if (g0 < 0) throw std::invalid_argument("g0 must be nonnegative");
  if (g1 < 0) throw std::invalid_argument("g1 must be nonnegative");
  if (family == Family::A && g1 != 0)
    throw std::invalid_argument("g1 must be 0 for family A");
  if (omega <= 0) throw std::invalid_argument("omega must be positive");
}

std::string Params::key() const {
  std::ostringstream os;
  os << family_char(family) << '|' << n << '|' << rational_str(g0) << '|'
     << rational_str(g1) << '|' << rational_str(omega);
  return os.str();
}

Rational pochhammer(const Rational& a, int l) {
  Rational r(1);
  for (int i = 0; i < l; ++i) r *= a + i;
  return r;
}

ExactScalar ExactScalar::from_rational(const Rational& q, const Rational& omega) {
  return monomial(q, 0, 0, omega);
}

ExactScalar ExactScalar::monomial(const Rational& coeff, int half_pi_exp, int sqrt_flag,
                                  const Rational& omega) {
  ExactScalar s(omega);
  s.add_term(half_pi_exp, sqrt_flag, coeff);
  s.normalize();
  return s;
}

ExactScalar ExactScalar::pi_half_pow(int half_exp, const Rational& omega) {
  return monomial(Rational(1), half_exp, 0, omega);
}

ExactScalar ExactScalar::omega_half_pow(int half_exp, const Rational& omega) {
  // omega^(h/2) = omega^floor(h/2) * (sqrt omega)^(h mod 2), h possibly negative;
  // sqrt(omega)^-1 = sqrt(omega)/omega.
  long long h = half_exp;
  long long q = h >= 0 ? h / 2 : -((-h + 1) / 2);
  int rem = static_cast<int>(h - 2 * q);  // 0 or 1
  Rational coeff = rational_pow(omega, q);
  return monomial(coeff, 0, rem, omega);
}

Rational ExactScalar::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1) {
    const auto& [key, coeff] = *terms_.begin();
    if (key.first == 0 && key.second == 0) return coeff;
  }
  throw NonRepresentable("scalar is not a plain rational: " + str());
}

void ExactScalar::add_term(int half_pi, int flag, const Rational& coeff) {
  if (coeff == 0) return;
  Key k{half_pi, flag};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void ExactScalar::normalize() {
  auto root = exact_sqrt(omega_);
  if (!root) return;
  // omega is a rational square: fold sqrt(omega) into the coefficients.
  std::map<Key, Rational> folded;
  for (const auto& [key, coeff] : terms_) {
    Key k{key.first, 0};
    Rational c = key.second ? coeff * (*root) : coeff;
    auto it = folded.find(k);
    if (it == folded.end())
      folded.emplace(k, c);
    else {
      it->second += c;
      if (it->second == 0) folded.erase(it);
    }
  }
  terms_ = std::move(folded);
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r(omega_);
  for (const auto& [key, coeff] : terms_) r.terms_.emplace(key, -coeff);
  return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  if (!o.terms_.empty() && !terms_.empty() && omega_ != o.omega_)
    throw std::invalid_argument("scalar omega mismatch");
  if (terms_.empty()) omega_ = o.omega_;
  for (const auto& [key, coeff] : o.terms_) add_term(key.first, key.second, coeff);
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this += -o; }

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (!o.terms_.empty() && !terms_.empty() && omega_ != o.omega_)
    throw std::invalid_argument("scalar omega mismatch");
  if (terms_.empty() || o.terms_.empty()) {
    if (terms_.empty() && !o.terms_.empty()) omega_ = o.omega_;
    terms_.clear();
    return *this;
  }
  ExactScalar r(omega_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      int flag = ka.second ^ kb.second;
      Rational c = ca * cb;
      if (ka.second && kb.second) c *= omega_;  // (sqrt omega)^2 = omega
      r.add_term(ka.first + kb.first, flag, c);
    }
  }
  terms_ = std::move(r.terms_);
  return *this;
}

ExactScalar& ExactScalar::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) coeff *= q;
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.terms_.empty()) throw std::domain_error("division by zero ExactScalar");
  if (!terms_.empty() && omega_ != o.omega_)
    throw std::invalid_argument("scalar omega mismatch");

  if (o.terms_.size() == 1) {
    const auto& [key, coeff] = *o.terms_.begin();
    // 1/(c * pi^(h/2) * sqrt(w)^f) = (1/c) * pi^(-h/2) * sqrt(w)^f / w^f
    Rational c = Rational(1) / coeff;
    if (key.second) c /= o.omega_;
    ExactScalar inv = monomial(c, -key.first, key.second, o.omega_);
    return *this *= inv;
  }

  // All terms on one pi-grade: invert a + b*sqrt(omega) by conjugation.
  int grade = o.terms_.begin()->first.first;
  Rational a(0), b(0);
  for (const auto& [key, coeff] : o.terms_) {
    if (key.first != grade)
      throw std::domain_error("division by mixed pi-grade element");
    (key.second ? b : a) = coeff;
  }
  Rational nrm = a * a - b * b * o.omega_;
  if (nrm == 0) throw std::domain_error("division by non-invertible element");
  // (pi^(h/2) (a + b sqrt w))^-1 = pi^(-h/2) (a - b sqrt w) / (a^2 - b^2 w)
  ExactScalar inv(o.omega_);
  inv.add_term(-grade, 0, a / nrm);
  inv.add_term(-grade, 1, -b / nrm);
  inv.normalize();
  return *this *= inv;
}

ExactScalar ExactScalar::pow_int(int k) const {
  if (k < 0) {
    ExactScalar one = from_rational(Rational(1), omega_);
    return (one / *this).pow_int(-k);
  }
  ExactScalar acc = from_rational(Rational(1), omega_);
  ExactScalar base = *this;
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

double ExactScalar::to_double() const {
  const double pi = 3.14159265358979323846;
  double w = calogero::to_double(omega_);
  double r = 0;
  for (const auto& [key, coeff] : terms_) {
    double v = calogero::to_double(coeff) * std::pow(pi, 0.5 * key.first);
    if (key.second) v *= std::sqrt(w);
    r += v;
  }
  return r;
}

std::string ExactScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, coeff] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rational_str(coeff);
    if (key.first != 0) os << "*pi^(" << key.first << "/2)";
    if (key.second) os << "*sqrt(" << rational_str(omega_) << ")";
  }
  return os.str();
}

ExactScalar gamma_half_integer(const Rational& a, const Rational& omega) {
  if (a <= 0) throw std::invalid_argument("gamma argument must be positive");
  Rational twice = a * 2;
  Integer den = boost::multiprecision::denominator(twice);
  if (den != 1)
    throw std::invalid_argument("gamma argument must be a half-integer: " + rational_str(a));
  Integer num2 = boost::multiprecision::numerator(twice);
  if (num2 % 2 == 0) {
    // integer argument: Gamma(m) = (m-1)!
    long long m = num2.convert_to<long long>() / 2;
    return ExactScalar::from_rational(Rational(factorial(static_cast<int>(m) - 1)), omega);
  }
  // a = k + 1/2: Gamma = (2k-1)!!/2^k * sqrt(pi)
  long long k = (num2.convert_to<long long>() - 1) / 2;
  Rational c(double_factorial_odd(static_cast<int>(k)),
             boost::multiprecision::pow(Integer(2), static_cast<unsigned>(k)));
  return ExactScalar::monomial(c, 1, 0, omega);
}

}  // namespace calogero
