#include "calogero/rational.hpp"

#include <stdexcept>

namespace calogero {

Rational parse_rational(const std::string& s) {
  auto bad = [&]() { throw std::invalid_argument("not a rational: '" + s + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  auto check_int = [&](const std::string& t) {
    if (t.empty()) bad();
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) bad();
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') bad();
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rational(Integer(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  Integer d(den);
  if (d == 0) bad();
  return Rational(Integer(num), d);
}

std::string rational_str(const Rational& q) {
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_pow(const Rational& base, long long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("0 raised to a negative power");
    return Rational(0);
  }
  Rational b = e > 0 ? base : Rational(1) / base;
  unsigned long long k = e > 0 ? static_cast<unsigned long long>(e)
                               : static_cast<unsigned long long>(-e);
  Rational acc(1);
  while (k) {
    if (k & 1ULL) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (q == 0) return Rational(0);
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  Integer rn = boost::multiprecision::sqrt(num);
  Integer rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Integer factorial(int k) {
  Integer r(1);
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

Integer double_factorial_odd(int k) {
  Integer r(1);
  for (int i = 1; i <= k; ++i) r *= 2 * i - 1;
  return r;
}

}  // namespace calogero
