#pragma once

#include "calogero/partition.hpp"
#include "calogero/rational.hpp"

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace calogero {

// Sparse multivariate polynomial over Q in x_1..x_n, n <= 8.
//
// Exponent vectors are dense fixed-length arrays; unused slots stay zero so
// hashing and comparison are uniform.  No zero coefficients are stored.
class Poly {
 public:
  static constexpr int kMaxVars = 8;
  using Expo = std::array<int16_t, kMaxVars>;

  struct ExpoHash {
    std::size_t operator()(const Expo& e) const {
      std::size_t h = 1469598103934665603ull;
      for (int16_t v : e) {
        h ^= static_cast<std::size_t>(static_cast<uint16_t>(v));
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  using TermMap = std::unordered_map<Expo, Rational, ExpoHash>;

  explicit Poly(int n);

  static Poly constant(int n, const Rational& c);
  static Poly variable(int n, int j);  // x_j, 1-based
  static Poly monomial(int n, const Expo& e, const Rational& c);

  int nvars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // -1 for the zero polynomial.
  int total_degree() const;

  Rational coefficient(const Expo& e) const;
  void set_coefficient(const Expo& e, const Rational& c);
  void add_term(const Expo& e, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& q);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& q) { return a *= q; }
  friend Poly operator*(const Rational& q, Poly a) { return a *= q; }
  friend Poly operator*(const Poly& a, const Poly& b);

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative(int j) const;       // d/dx_j
  Poly mul_var_pow(int j, int k) const;  // * x_j^k

  // Exact quotient p / x_j; throws std::domain_error on nonzero remainder.
  Poly divide_var(int j) const;
  // Exact quotient p / (x_j + sign*x_k), sign in {-1, +1}; throws on remainder.
  Poly divide_linear(int j, int k, int sign) const;

  // x_i -> x_i^2 for all i.
  Poly squared_vars() const;

  Poly homogeneous_part(int d) const;
  std::vector<int> homogeneous_degrees() const;  // sorted ascending

  Rational eval(const std::vector<Rational>& x) const;
  double eval_double(const std::vector<double>& x) const;

  bool is_symmetric() const;
  bool all_exponents_even() const;

  // Deterministic order (graded lexicographic, descending) for output.
  std::vector<std::pair<Expo, Rational>> sorted_terms() const;

  std::string str() const;  // human-readable, deterministic

 private:
  int n_;
  TermMap terms_;
};

}  // namespace calogero
