#include "doctest.h"

#include "calogero/scalars.hpp"

#include <random>

using namespace calogero;

TEST_CASE("pochhammer basics") {
  CHECK(pochhammer(rat(7, 3), 0) == 1);
  CHECK(pochhammer(rat(1, 2), 2) == rat(3, 4));
  CHECK(pochhammer(rat(-2), 3) == 0);
  CHECK(pochhammer(rat(1), 5) == 120);
}

TEST_CASE("pochhammer splitting identity") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> num(-8, 8), den(1, 5), len(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a(num(rng), den(rng));
    int l = len(rng), m = len(rng);
    CHECK(pochhammer(a, l + m) == pochhammer(a, l) * pochhammer(a + l, m));
  }
}

TEST_CASE("gamma at half-integers") {
  Rational w(1);
  CHECK(gamma_half_integer(rat(4), w) == ExactScalar::from_rational(rat(6), w));
  CHECK(gamma_half_integer(rat(5, 2), w) == ExactScalar::monomial(rat(3, 4), 1, 0, w));
  CHECK(gamma_half_integer(rat(1, 2), w) == ExactScalar::pi_half_pow(1, w));
  CHECK_THROWS_AS(gamma_half_integer(rat(0), w), std::invalid_argument);
  CHECK_THROWS_AS(gamma_half_integer(rat(-3, 2), w), std::invalid_argument);
  CHECK_THROWS_AS(gamma_half_integer(rat(1, 3), w), std::invalid_argument);
}

TEST_CASE("gamma shift property") {
  Rational w(2);
  for (int twice_a = 1; twice_a <= 17; ++twice_a) {
    Rational a(twice_a, 2);
    CHECK(gamma_half_integer(a + 1, w) == gamma_half_integer(a, w) * a);
  }
}

TEST_CASE("scalar monomial arithmetic") {
  Rational w(2);
  ExactScalar sp = ExactScalar::pi_half_pow(1, w);
  CHECK(sp * sp == ExactScalar::pi_half_pow(2, w));
  ExactScalar sw = ExactScalar::omega_half_pow(1, w);
  CHECK(sw * sw == ExactScalar::from_rational(rat(2), w));
  ExactScalar three_sp = sp * rat(3);
  CHECK(three_sp / sp == ExactScalar::from_rational(rat(3), w));
}

TEST_CASE("scalar ring axioms on random inputs") {
  Rational w(3, 5);
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> coef(-5, 5), hexp(-3, 3), flag(0, 1), nterms(0, 3);
  auto random_scalar = [&]() {
    ExactScalar s(w);
    int k = nterms(rng);
    for (int i = 0; i <= k; ++i)
      s += ExactScalar::monomial(Rational(coef(rng)), hexp(rng), flag(rng), w);
    return s;
  };
  for (int trial = 0; trial < 100; ++trial) {
    ExactScalar a = random_scalar(), b = random_scalar(), c = random_scalar();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("square omega folds the sqrt flag") {
  Rational w(4, 9);
  ExactScalar s = ExactScalar::monomial(rat(3), 2, 1, w);
  for (const auto& [key, coeff] : s.terms()) CHECK(key.second == 0);
  CHECK(s == ExactScalar::monomial(rat(2), 2, 0, w));
  ExactScalar t = ExactScalar::omega_half_pow(-3, w);
  for (const auto& [key, coeff] : t.terms()) CHECK(key.second == 0);
  CHECK(t.as_rational() == rat(27, 8));
}

TEST_CASE("quadratic extension division") {
  Rational w(2);
  // (1 + sqrt(2)) * (-1 + sqrt(2)) = 1
  ExactScalar a = ExactScalar::from_rational(rat(1), w) + ExactScalar::monomial(rat(1), 0, 1, w);
  ExactScalar one = ExactScalar::from_rational(rat(1), w);
  ExactScalar inv = one / a;
  CHECK(inv * a == one);
  ExactScalar zero(w);
  CHECK_THROWS_AS(one / zero, std::domain_error);
  // mixed pi-grades are not invertible in this ring
  ExactScalar mixed = one + ExactScalar::pi_half_pow(2, w);
  CHECK_THROWS_AS(one / mixed, std::domain_error);
}

TEST_CASE("pow_int including negative powers") {
  Rational w(5);
  ExactScalar s = ExactScalar::monomial(rat(2), 1, 1, w);
  CHECK(s.pow_int(2) == ExactScalar::monomial(rat(20), 2, 0, w));
  CHECK(s.pow_int(-1) * s == ExactScalar::from_rational(rat(1), w));
  CHECK(s.pow_int(0) == ExactScalar::from_rational(rat(1), w));
}

TEST_CASE("params validation") {
  Params p;
  p.family = Family::A;
  p.n = 2;
  p.g0 = rat(1);
  p.omega = rat(1);
  CHECK_NOTHROW(p.validate());
  p.g1 = rat(1);
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.family = Family::B;
  CHECK_NOTHROW(p.validate());
  p.omega = rat(0);
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("rational parse and print round trip") {
  CHECK(rational_str(parse_rational("-22/7")) == "-22/7");
  CHECK(rational_str(parse_rational("5")) == "5");
  CHECK(parse_rational("4/6") == rat(2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(exact_sqrt(rat(49, 64)).value() == rat(7, 8));
  CHECK(!exact_sqrt(rat(2)).has_value());
  CHECK(!exact_sqrt(rat(-4)).has_value());
}
