#pragma once

#include "calogero/construct.hpp"

#include <optional>
#include <string>
#include <vector>

namespace calogero {

// Signed index-set pair for expansion coefficients; 1-based indices.
struct SignedIndexSets {
  std::vector<int> plus;
  std::vector<int> minus;
};

// Single-step coefficients V^_{+-j}; signed_j in {-n..-1, 1..n}.
// Returns 0 exactly at boundary cases lam +- e_j not in the cone.
Rational vhat_r1(int signed_j, const Partition& lam, const Params& params);

// General leading Pieri coefficient V^_{J+,J-;K}; K is normally the
// complement of J+ u J-.  Throws NonGeneric on a resonant zero denominator.
Rational vhat_general(const SignedIndexSets& sets, const std::vector<int>& K,
                      const Partition& lam, const Params& params);

// Laguerre diagonal-block coefficients U^B_{K,p}; U = 1 for p = 0.
Rational uhat_B(const std::vector<int>& K, int p, const Partition& lam,
                const Params& params);

struct CheckReport {
  enum class Status { pass, fail, non_generic };
  Status status = Status::fail;
  int residual_terms = 0;
  std::string detail;
  bool passed() const { return status == Status::pass; }
};

// (sum_j x_j) P_lam = sum V^_j P_{lam+e_j} + V^_{-j} P_{lam-e_j}   (A)
// (-w sum x_j^2) P_lam = sum (V^_j P_{lam+e_j} - (V^_j+V^_{-j}) P_lam + ...) (B)
CheckReport pieri_r1_check(const Partition& lam, const Params& params);

// Full Laguerre expansion E^B_r P_lam = sum V^ U^ P_{lam+e_{J+}-e_{J-}}.
CheckReport pieri_full_B_check(int r, const Partition& lam, const Params& params);

// Family-A structure: expand E^A_r P_lam by exact Gram projection; support
// only on lam+e_{J+}-e_{J-} with |J+|+|J-| <= r, and the |J+|+|J-| = r
// coefficients equal V^_{J+,J-;K}.  Integer couplings.
CheckReport pieri_structure_A_check(int r, const Partition& lam, const Params& params,
                                    GramTable* table = nullptr);

// Closed-form squared norm <p_lam, p_lam>; exact when every factor lands in
// Q[sqrt(omega)] (x) pi^(Z/2), otherwise throws NonRepresentable.
ExactScalar norm_formula(const Partition& lam, const Params& params);

// Ratio <p_lam,p_lam>/<1,1>: pure Pochhammer product, valid at all rational
// couplings.
Rational norm_ratio(const Partition& lam, const Params& params);

// <1,1>: the closed-form weight integrals.
ExactScalar mehta_macdonald(const Params& params);

// Norm recurrence along lam -> lam + e_{1..r}: the leading-coefficient
// identity and the squared-norm ratio step.
CheckReport norm_recurrence_check(const Partition& lam, int r, const Params& params);

}  // namespace calogero
