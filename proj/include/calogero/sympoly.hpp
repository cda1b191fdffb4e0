#pragma once

#include "calogero/partition.hpp"
#include "calogero/poly.hpp"
#include "calogero/scalars.hpp"

#include <map>
#include <mutex>

namespace calogero {

// Monomial symmetric polynomial m_lambda (or m_{2 lambda} when even is set):
// sum of x^mu over the S_n-orbit of lambda, each distinct monomial once.
Poly msym(const Partition& lam, int n, bool even = false);

// e_r(x_1..x_n).
Poly elementary_sym_plain(int r, int n);

// Family multiplier: E^A_r = e_r(x), E^B_r = (-omega)^r e_r(x^2).
Poly elementary_sym(int r, const Params& params);

// Coefficients c_mu with p = sum c_mu m_mu (m_{2 mu} when even).
// Throws std::invalid_argument if p is not (even-)symmetric.
std::map<Partition, Rational> expand_in_msym(const Poly& p, bool even);

// (d_j - d_k)p / (x_j - x_k); p must be j<->k symmetric.
Poly dd_minus_pair(const Poly& p, int j, int k);
// (d_j + d_k)p / (x_j + x_k); for even-symmetric p.
Poly dd_plus_pair(const Poly& p, int j, int k);
// (d_j p) / x_j; for p even in x_j.
Poly dd_inv_x(const Poly& p, int j);

// Expanded non-Gaussian weight factor; requires integer couplings.
//   A: prod_{j<k} (x_j - x_k)^(2 g0)
//   B: prod_{j<k} (x_j^2 - x_k^2)^(2 g0) * prod_j x_j^(2 g1)
// Cached per (family, n, g0, g1).
const Poly& weight_polynomial(const Params& params);

// Exact integral of p * Delta^C over R^n, term-by-term Gaussian moments.
// Requires integer g0, g1.
ExactScalar gaussian_moment(const Poly& p, const Params& params);

// <f, g> = integral of f*g*Delta^C; same restrictions as gaussian_moment.
ExactScalar gram_inner(const Poly& f, const Poly& g, const Params& params);

// Caches monomial-symmetric pair inner products for one parameter set, so
// repeated Gram solves and pairwise orthogonality scans stay cheap.
class GramTable {
 public:
  explicit GramTable(const Params& params);

  const Params& params() const { return params_; }

  // <m_mu, m_nu> in the family inner product (m_{2 mu} etc. for B).
  ExactScalar inner_msym(const Partition& mu, const Partition& nu);

  // Bilinear extension to msym expansions.
  ExactScalar inner_expanded(const std::map<Partition, Rational>& a,
                             const std::map<Partition, Rational>& b);

 private:
  Params params_;
  bool even_;
  std::map<std::pair<Partition, Partition>, ExactScalar> cache_;
  std::mutex mu_;
};

}  // namespace calogero
