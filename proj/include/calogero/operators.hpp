#pragma once

#include "calogero/construct.hpp"

#include <vector>

namespace calogero {

// Second-order operator D_1 applied exactly; symmetric input required
// (even-symmetric for B).
Poly apply_D1(const Poly& p, const Params& params);

// E_r^A = (2 omega)^r e_r(lambda), E_r^B = (4 omega)^r e_r(lambda).
Rational eigenvalue_E(int r, const Partition& lam, const Params& params);

// Exact diagonal action of the difference operators in the limit of vanishing
// step: (M omega)^r sum_{j_1<...<j_r} prod_a (lam_{j_a} + (r-a) g0).  Coincides
// with eigenvalue_E for r = 1 or g0 = 0; for r >= 2 the coupling staircase is
// what the operator family actually produces.
Rational difference_operator_eigenvalue(int r, const Partition& lam, const Params& params);

// Ground energy: A: w n (1 + g0 (n-1));  B: w n (1 + 2 g0 (n-1) + 2 g1).
Rational ground_energy(const Params& params);

// Value of (D_{r,s} p)(x) under the real substitution s = i*beta, so that
// shifts become x_j -> x_j -+ s and every coefficient factor is rational.
// Throws NonGeneric when a factor denominator vanishes at (x, s).
Rational difference_eval(const Poly& p, int r, const Rational& s,
                         const std::vector<Rational>& x, const Params& params);

// The displayed two-term reduction for r = 1; cross-check of the general sum.
Rational difference_eval_r1_direct(const Poly& p, const Rational& s,
                                   const std::vector<Rational>& x, const Params& params);

// Exact Taylor coefficients in s of (D_{r,s} p)(x), orders 0..2r, recovered by
// clearing the known denominator polynomial, interpolating, and dividing back
// as a power series.
std::vector<Rational> difference_series(const Poly& p, int r,
                                        const std::vector<Rational>& x,
                                        const Params& params);

struct EigenSeriesCheck {
  bool prefix_zero = false;        // s^0..s^(2r-1) all vanish
  bool leading_matches = false;    // s^(2r) coeff = (-1)^r * diagonal action * p(x)
  bool plain_er_matches = false;   // same with the plain e_r eigenvalue form
};

EigenSeriesCheck difference_eigen_check(const Partition& lam, int r,
                                        const std::vector<Rational>& x,
                                        const Params& params);

// Weight function value (floating point).
double weight_value(const std::vector<double>& x, const Params& params);

// psi_lambda = sqrt(Delta) * p_lambda at a float point off the singular set.
double wavefunction_eval(const Partition& lam, const std::vector<double>& x,
                         const Params& params);

// |H_1 psi - E_1 psi|(x) with second derivatives by central differences.
double hamiltonian_residual(const Partition& lam, const std::vector<double>& x,
                            double h, const Params& params);

}  // namespace calogero
