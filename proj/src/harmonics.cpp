#include "calogero/harmonics.hpp"

#include "calogero/construct.hpp"

#include <stdexcept>

namespace calogero {

Poly apply_L(const Poly& p, const Params& params) {
  int n = params.n;
  if (p.nvars() != n) throw std::invalid_argument("apply_L: nvars mismatch");
  Poly r(n);
  for (int j = 1; j <= n; ++j) r += p.derivative(j).derivative(j);
  if (params.family == Family::B && params.g1 != 0)
    for (int j = 1; j <= n; ++j) r += dd_inv_x(p, j) * (2 * params.g1);
  if (params.g0 != 0) {
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        r += dd_minus_pair(p, j, k) * (2 * params.g0);
        if (params.family == Family::B) r += dd_plus_pair(p, j, k) * (2 * params.g0);
      }
  }
  return r;
}

std::vector<Rational> radial_poly(int m, int l, const Params& params) {
  if (m < 0 || l < 0) throw std::invalid_argument("radial_poly: negative index");
  params.validate();
  int n = params.n;
  // First-order coefficient of the radial equation, from substituting
  // R(r) Y(x) into the second-order operator: pairs contribute one divided
  // difference for A but two (difference and sum) for B.
  Rational c = params.family == Family::A
                   ? Rational(2 * l) + params.g0 * n * (n - 1) + (n - 1)
                   : Rational(4 * l) + 2 * params.g0 * n * (n - 1) + 2 * n * params.g1 + (n - 1);
  std::vector<Rational> a(static_cast<std::size_t>(m) + 1);
  a[static_cast<std::size_t>(m)] = Rational(1);
  for (int i = m - 1; i >= 0; --i) {
    Rational denom = 2 * params.omega * Rational(m - i);
    Rational num = Rational(i + 1) * (Rational(2 * i + 1) + c);
    a[static_cast<std::size_t>(i)] =
        -a[static_cast<std::size_t>(i + 1)] * num / denom;
  }
  return a;
}

namespace {

Poly r_squared(int n) {
  Partition p(static_cast<std::size_t>(n), 0);
  p[0] = 2;
  return msym(p, n);
}

Poly poly_pow(const Poly& base, int k) {
  Poly acc = Poly::constant(base.nvars(), Rational(1));
  for (int i = 0; i < k; ++i) acc = acc * base;
  return acc;
}

}  // namespace

HarmonicDecomposition decompose_harmonic(const Partition& lam, const Params& params) {
  params.validate();
  const OrthoPoly& op = construct_poly(lam, params);
  const Poly& p = op.poly;
  int n = params.n;
  bool typeA = params.family == Family::A;
  int wgt = weight(lam);
  int M = typeA ? wgt / 2 : wgt;

  auto x_degree = [&](int m) { return typeA ? wgt - 2 * m : 2 * (wgt - m); };
  auto ell = [&](int m) { return typeA ? wgt - 2 * m : wgt - m; };

  std::vector<std::vector<Rational>> radial(static_cast<std::size_t>(M) + 1);
  for (int m = 0; m <= M; ++m) radial[static_cast<std::size_t>(m)] = radial_poly(m, ell(m), params);

  Poly r2 = r_squared(n);
  std::vector<Poly> Y(static_cast<std::size_t>(M) + 1, Poly(n));
  // Bottom-up: the x-degree-(wgt - 2m) component involves Y_{m'} for m' >= m only.
  for (int m = M; m >= 0; --m) {
    Poly rhs = p.homogeneous_part(x_degree(m));
    for (int mp = m + 1; mp <= M; ++mp) {
      const Poly& Ymp = Y[static_cast<std::size_t>(mp)];
      if (Ymp.is_zero()) continue;
      const Rational& amp = radial[static_cast<std::size_t>(mp)][static_cast<std::size_t>(mp - m)];
      if (amp != 0) rhs -= poly_pow(r2, mp - m) * Ymp * amp;
    }
    const Rational& a0 = radial[static_cast<std::size_t>(m)][0];
    Y[static_cast<std::size_t>(m)] = rhs * (Rational(1) / a0);
  }

  // The split is forced; the theorem's content is that each piece is harmonic
  // and that the radial profiles reconstruct p exactly.
  Poly recon(n);
  for (int m = 0; m <= M; ++m) {
    const Poly& Ym = Y[static_cast<std::size_t>(m)];
    if (Ym.is_zero()) continue;
    if (!apply_L(Ym, params).is_zero())
      throw std::runtime_error("decompose_harmonic: component is not harmonic at m=" +
                               std::to_string(m));
    Poly Rm(n);
    const auto& coeffs = radial[static_cast<std::size_t>(m)];
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) Rm += poly_pow(r2, static_cast<int>(i)) * coeffs[i];
    recon += Rm * Ym;
  }
  if (!(recon == p))
    throw std::runtime_error("decompose_harmonic: reconstruction mismatch");

  HarmonicDecomposition dec;
  dec.lambda = lam;
  for (int m = 0; m <= M; ++m) {
    if (Y[static_cast<std::size_t>(m)].is_zero()) continue;
    HarmonicTerm t;
    t.m = m;
    t.radial = radial[static_cast<std::size_t>(m)];
    t.harmonic = Y[static_cast<std::size_t>(m)];
    dec.terms.push_back(std::move(t));
  }
  return dec;
}

Poly dunkl_projection(const Partition& lam, int m, const Params& params) {
  params.validate();
  int n = params.n;
  bool typeA = params.family == Family::A;
  int wgt = weight(lam);
  int M = typeA ? wgt / 2 : wgt;
  if (m < 0 || m > M) throw std::invalid_argument("dunkl_projection: m out of range");

  Rational d = typeA ? params.g0 * n * (n - 1) / 2
                     : params.g0 * n * (n - 1) + Rational(n) * params.g1;
  Poly jack = jack_monic(lam, n, params.g0);
  if (!typeA) jack = jack.squared_vars();

  // (L)^m of the leading part, then the T-series at angular index k.
  Poly lm = jack;
  for (int i = 0; i < m; ++i) lm = apply_L(lm, params);

  int k = typeA ? wgt - 2 * m : wgt - m;
  int jmax = typeA ? k / 2 : k;
  Poly r2 = r_squared(n);
  Poly acc(n);
  Poly lj = lm;
  for (int j = 0; j <= jmax; ++j) {
    Rational base = typeA ? Rational(-n) / 2 - d - k + 2 : Rational(-n) / 2 - d - 2 * k + 2;
    Rational den = rational_pow(rat(4), j) * Rational(factorial(j)) * pochhammer(base, j);
    if (den == 0) throw NonGeneric("dunkl_projection: zero Pochhammer in T");
    if (!lj.is_zero()) acc += poly_pow(r2, j) * lj * (Rational(1) / den);
    if (j < jmax) lj = apply_L(lj, params);
  }
  Rational head_base = typeA ? Rational(n) / 2 + d + (wgt - 2 * m)
                             : Rational(n) / 2 + d + 2 * wgt - 2 * m;
  Rational head = rational_pow(rat(4), m) * Rational(factorial(m)) * pochhammer(head_base, m);
  if (head == 0) throw NonGeneric("dunkl_projection: zero Pochhammer head");
  return acc * (Rational(1) / head);
}

int dim_homogeneous(int l, int n) {
  if (l < 0) return 0;
  return static_cast<int>(partitions_of_weight(n, l).size());
}

int dim_harmonic(int l, int n, Family family) {
  int back = family == Family::A ? 2 : 1;
  return dim_homogeneous(l, n) - dim_homogeneous(l - back, n);
}

}  // namespace calogero
