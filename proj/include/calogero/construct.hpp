#pragma once

#include "calogero/sympoly.hpp"

#include <map>
#include <string>

namespace calogero {

enum class Normalization { monic, pieri };

struct OrthoPoly {
  Params params;
  Partition lambda;
  Poly poly;
  Normalization normalization = Normalization::monic;
};

// Monic Jack polynomial J_lambda(x; 1/g0): homogeneous of degree |lambda|,
// coefficient 1 on m_lambda, triangular in dominance order, eigenfunction of
// sum x_j^2 d_j^2 + 2 g0 sum_{j<k} (x_j^2 d_j - x_k^2 d_k)/(x_j - x_k).
// For g0 = 0 this degenerates to m_lambda.
Poly jack_monic(const Partition& lam, int n, const Rational& g0);

// Monic polynomial by top-term-plus-descent: top homogeneous part is the Jack
// polynomial (in x for A, in x^2 for B); lower parts follow from splitting the
// second-order operator into its degree-preserving and degree-lowering pieces.
OrthoPoly hermite_poly(const Partition& lam, const Params& params);
OrthoPoly laguerre_poly(const Partition& lam, const Params& params);

// Family dispatch with a process-wide memo keyed by (params, lambda).
const OrthoPoly& construct_poly(const Partition& lam, const Params& params);

// Independent construction at integer couplings: solve <p, m_mu> = 0 over all
// mu < lambda in the dominance order (lower weights included).
OrthoPoly gram_schmidt_oracle(const Partition& lam, const Params& params,
                              GramTable* table = nullptr);

// Leading coefficient relating monic and recurrence normalizations.
Rational c_coeff(const Partition& lam, const Params& params);

OrthoPoly pieri_normalize(const OrthoPoly& p);

// One-variable closed forms from the terminating confluent series; test oracle.
Poly one_var_closed_form(int lam, const Params& params);

}  // namespace calogero
