#pragma once

#include "calogero/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace calogero {

enum class Family { A, B };

char family_char(Family f);
Family parse_family(const std::string& s);

// Session parameters: family tag, variable count and exact rational couplings.
struct Params {
  Family family = Family::A;
  int n = 1;
  Rational g0 = 0;
  Rational g1 = 0;  // family B only; forced to 0 for A
  Rational omega = 1;

  void validate() const;  // throws std::invalid_argument
  std::string key() const;
};

// Rising factorial a(a+1)...(a+l-1); equals 1 for l = 0.
Rational pochhammer(const Rational& a, int l);

// Raised when a closed-form value does not live in Q[sqrt(omega)] (x) pi^{Z/2}.
class NonRepresentable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised on a zero denominator at a resonant parameter/partition combination.
class NonGeneric : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element of Q[sqrt(omega)] (x) pi^{Z/2} for a fixed rational omega > 0.
//
// Terms map (halfPiExp, sqrtOmegaFlag) -> rational coefficient; integer powers
// of omega live inside the coefficients and (sqrt omega)^2 reduces to omega
// eagerly.  When omega is a perfect rational square the flag is folded away
// during normalization, so equality is plain coefficient comparison.
class ExactScalar {
 public:
  using Key = std::pair<int, int>;  // (halfPiExp, sqrtOmegaFlag)

  ExactScalar() : omega_(1) {}
  explicit ExactScalar(const Rational& omega) : omega_(omega) {}

  static ExactScalar from_rational(const Rational& q, const Rational& omega);
  static ExactScalar monomial(const Rational& coeff, int half_pi_exp, int sqrt_flag,
                              const Rational& omega);
  // pi^(halfExp/2)
  static ExactScalar pi_half_pow(int half_exp, const Rational& omega);
  // omega^(halfExp/2)
  static ExactScalar omega_half_pow(int half_exp, const Rational& omega);

  const Rational& omega() const { return omega_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // The purely rational value; throws if any pi or sqrt(omega) content remains.
  Rational as_rational() const;

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator*=(const Rational& q);
  // Divisor must be a single (pi, sqrt(omega)) monomial or an invertible
  // element a + b*sqrt(omega) concentrated on one pi-grade.
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator*(ExactScalar a, const Rational& q) { return a *= q; }
  friend ExactScalar operator*(const Rational& q, ExactScalar a) { return a *= q; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

  ExactScalar pow_int(int k) const;

  bool operator==(const ExactScalar& o) const {
    return omega_ == o.omega_ && terms_ == o.terms_;
  }
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }

  double to_double() const;
  std::string str() const;

 private:
  void add_term(int half_pi, int flag, const Rational& coeff);
  void normalize();

  Rational omega_;
  std::map<Key, Rational> terms_;
};

// Gamma(a) for a > 0 with 2a integral: a rational for integer a, a rational
// multiple of pi^(1/2) for half-odd-integer a.  Rejects anything else.
ExactScalar gamma_half_integer(const Rational& a, const Rational& omega);

}  // namespace calogero
