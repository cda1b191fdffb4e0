#pragma once

#include "calogero/sympoly.hpp"

#include <vector>

namespace calogero {

// Deformed Laplacian L^A / L^B annihilating the generalized spherical
// harmonics; exact polynomial output via divided differences.
Poly apply_L(const Poly& p, const Params& params);

// Monic degree-m polynomial solution of the radial equation at angular degree
// l, as coefficients in t = r^2 (ascending).  Computed by the exact recursion
// the equation induces on coefficients.
std::vector<Rational> radial_poly(int m, int l, const Params& params);

struct HarmonicTerm {
  int m = 0;                     // radial index
  std::vector<Rational> radial;  // R_m coefficients in t = r^2
  Poly harmonic;                 // Y component, L Y = 0
  HarmonicTerm() : harmonic(1) {}
};

struct HarmonicDecomposition {
  Partition lambda;
  std::vector<HarmonicTerm> terms;  // only nonzero components, ascending m
};

// Unique radial-spherical splitting p_lambda = sum_m R_m(r) Y_m, solved
// degree by degree; harmonicity and reconstruction are asserted.
HarmonicDecomposition decompose_harmonic(const Partition& lam, const Params& params);

// Inversion-formula route to the Y component of radial index m, applied to
// the leading homogeneous part.  Cross-check against decompose_harmonic.
Poly dunkl_projection(const Partition& lam, int m, const Params& params);

// dim of homogeneous symmetric polynomials of degree l (in x or x^2).
int dim_homogeneous(int l, int n);
// dim of the harmonic subspace.
int dim_harmonic(int l, int n, Family family);

}  // namespace calogero
