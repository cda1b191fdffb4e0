#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace calogero {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

// "p/q", or just "p" when the denominator is 1.
std::string rational_str(const Rational& q);

// base^e with integer e; negative e requires base != 0.
Rational rational_pow(const Rational& base, long long e);

// Exact square root when q is a perfect square of a rational, nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& q);

double to_double(const Rational& q);

Integer factorial(int k);

// (2k-1)!!, with value 1 for k = 0.
Integer double_factorial_odd(int k);

}  // namespace calogero
