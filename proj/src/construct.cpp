#include "calogero/construct.hpp"

#include "calogero/harmonics.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace calogero {

namespace {

// Degree-preserving Sutherland-type operator whose eigenfunctions are the
// monic Jack polynomials at alpha = 1/g0.
Poly sutherland_apply(const Poly& p, const Rational& g0) {
  int n = p.nvars();
  Poly r(n);
  for (int j = 1; j <= n; ++j)
    r += p.derivative(j).derivative(j).mul_var_pow(j, 2);
  if (g0 != 0) {
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        Poly q = p.derivative(j).mul_var_pow(j, 2) - p.derivative(k).mul_var_pow(k, 2);
        r += q.divide_linear(j, k, -1) * (2 * g0);
      }
  }
  return r;
}

Rational sutherland_eigenvalue(const Partition& nu, int n, const Rational& g0) {
  Rational e(0);
  for (int i = 0; i < n; ++i) {
    int v = nu[static_cast<std::size_t>(i)];
    e += Rational(v) * (v - 1);
    e += 2 * g0 * Rational(n - 1 - i) * v;
  }
  return e;
}

// Graded-lex descending; a linear extension of dominance at fixed weight.
bool lex_greater(const Partition& a, const Partition& b) { return a > b; }

}  // namespace

Poly jack_monic(const Partition& lam, int n, const Rational& g0) {
  if (static_cast<int>(lam.size()) != n)
    throw std::invalid_argument("jack_monic: partition length != n");
  if (!is_partition(lam)) throw std::invalid_argument("jack_monic: not a partition");
  if (g0 < 0) throw std::invalid_argument("jack_monic: g0 must be nonnegative");
  if (g0 == 0) return msym(lam, n);

  std::vector<Partition> basis;
  for (const auto& mu : partitions_of_weight(n, weight(lam)))
    if (dominance_leq(mu, lam)) basis.push_back(mu);
  std::sort(basis.begin(), basis.end(), lex_greater);  // lam comes first

  Rational e_top = sutherland_eigenvalue(lam, n, g0);
  std::map<Partition, Rational> coeff;
  coeff[lam] = Rational(1);
  // action[mu] = expansion of (operator applied to m_mu)
  std::map<Partition, std::map<Partition, Rational>> action;
  for (std::size_t idx = 1; idx < basis.size(); ++idx) {
    const Partition& mu = basis[idx];
    Rational rhs(0);
    for (std::size_t prev = 0; prev < idx; ++prev) {
      const Partition& nu = basis[prev];
      auto cit = coeff.find(nu);
      if (cit == coeff.end() || cit->second == 0) continue;
      auto ait = action.find(nu);
      if (ait == action.end())
        ait = action.emplace(nu, expand_in_msym(sutherland_apply(msym(nu, n), g0), false)).first;
      auto mit = ait->second.find(mu);
      if (mit != ait->second.end()) rhs += cit->second * mit->second;
    }
    Rational gap = e_top - sutherland_eigenvalue(mu, n, g0);
    if (gap == 0)
      throw std::runtime_error("jack_monic: eigenvalue collision at " + partition_str(mu));
    if (rhs != 0) coeff[mu] = rhs / gap;
  }

  Poly out(n);
  for (const auto& [mu, c] : coeff)
    if (c != 0) out += msym(mu, n) * c;
  return out;
}

namespace {

OrthoPoly construct_descent(const Partition& lam, const Params& params) {
  params.validate();
  if (static_cast<int>(lam.size()) != params.n)
    throw std::invalid_argument("construct: partition length != n");
  if (!is_partition(lam)) throw std::invalid_argument("construct: not a partition");

  bool typeA = params.family == Family::A;
  Poly top = jack_monic(lam, params.n, params.g0);
  if (!typeA) top = top.squared_vars();
  int top_deg = typeA ? weight(lam) : 2 * weight(lam);

  Poly result = top;
  Poly current = top;
  for (int d = top_deg - 2; d >= 0 && !current.is_zero(); d -= 2) {
    Poly lowered = apply_L(current, params);
    Rational denom = 2 * params.omega * Rational(top_deg - d);
    current = lowered * (Rational(-1) / denom);
    result += current;
  }
  return OrthoPoly{params, lam, result, Normalization::monic};
}

}  // namespace

OrthoPoly hermite_poly(const Partition& lam, const Params& params) {
  if (params.family != Family::A)
    throw std::invalid_argument("hermite_poly expects family A");
  return construct_descent(lam, params);
}

OrthoPoly laguerre_poly(const Partition& lam, const Params& params) {
  if (params.family != Family::B)
    throw std::invalid_argument("laguerre_poly expects family B");
  return construct_descent(lam, params);
}

const OrthoPoly& construct_poly(const Partition& lam, const Params& params) {
  static std::map<std::string, OrthoPoly> memo;
  static std::mutex mu;
  std::string key = params.key() + "#" + partition_str(lam);
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  OrthoPoly p = construct_descent(lam, params);
  return memo.emplace(key, std::move(p)).first->second;
}

namespace {

// Dense Gaussian elimination over Q; returns the solution of M x = b.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> M,
                                   std::vector<Rational> b) {
  std::size_t n = M.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("singular linear system");
    std::swap(M[piv], M[col]);
    std::swap(b[piv], b[col]);
    Rational inv = Rational(1) / M[col][col];
    for (std::size_t j = col; j < n; ++j) M[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || M[row][col] == 0) continue;
      Rational f = M[row][col];
      for (std::size_t j = col; j < n; ++j) M[row][j] -= f * M[col][j];
      b[row] -= f * b[col];
    }
  }
  return b;
}

}  // namespace

OrthoPoly gram_schmidt_oracle(const Partition& lam, const Params& params,
                              GramTable* table) {
  params.validate();
  GramTable local(params);
  GramTable& g = table ? *table : local;
  bool typeA = params.family == Family::A;

  std::vector<Partition> below;
  for (const auto& mu : dominated_by(lam)) {
    if (typeA && (weight(mu) + weight(lam)) % 2 != 0) continue;  // zero by parity
    below.push_back(mu);
  }

  Poly p = msym(lam, params.n, !typeA);
  if (!below.empty()) {
    std::size_t m = below.size();
    std::vector<std::vector<Rational>> M(m, std::vector<Rational>(m));
    std::vector<Rational> rhs(m);
    // All entries share the grade pi^(n/2) w^(-n/2); solve on the rational parts.
    for (std::size_t r = 0; r < m; ++r) {
      ExactScalar t = g.inner_msym(lam, below[r]);
      rhs[r] = t.is_zero() ? Rational(0) : -(t.terms().begin()->second);
      for (std::size_t c = 0; c < m; ++c) {
        ExactScalar e = g.inner_msym(below[c], below[r]);
        M[r][c] = e.is_zero() ? Rational(0) : e.terms().begin()->second;
      }
    }
    std::vector<Rational> sol = solve_linear(std::move(M), std::move(rhs));
    for (std::size_t c = 0; c < m; ++c)
      if (sol[c] != 0) p += msym(below[c], params.n, !typeA) * sol[c];
  }
  return OrthoPoly{params, lam, p, Normalization::monic};
}

namespace {

// [m g0]_l / [(m+1) g0]_l with the grade-0 factor cancelled, so the value is
// exact for g0 > 0 and extends continuously to g0 = 0.
Rational c_pair_ratio(int m, int l, const Rational& g0) {
  Rational r(1);
  for (int i = 0; i < l; ++i) {
    if (i == 0)
      r *= Rational(m, m + 1);
    else
      r *= (m * g0 + i) / ((m + 1) * g0 + i);
  }
  return r;
}

}  // namespace

Rational c_coeff(const Partition& lam, const Params& params) {
  params.validate();
  int n = params.n;
  Rational c(1);
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k)
      c *= c_pair_ratio(k - j, lam[static_cast<std::size_t>(j - 1)] - lam[static_cast<std::size_t>(k - 1)],
                        params.g0);
  if (params.family == Family::B) {
    c *= rational_pow(-params.omega, weight(lam));
    for (int j = 1; j <= n; ++j) {
      Rational base = Rational(n - j) * params.g0 + params.g1 + rat(1, 2);
      Rational denom = pochhammer(base, lam[static_cast<std::size_t>(j - 1)]);
      if (denom == 0) throw NonGeneric("c_coeff: zero Pochhammer denominator");
      c /= denom;
    }
  }
  return c;
}

OrthoPoly pieri_normalize(const OrthoPoly& p) {
  if (p.normalization == Normalization::pieri) return p;
  OrthoPoly out = p;
  out.poly = p.poly * c_coeff(p.lambda, p.params);
  out.normalization = Normalization::pieri;
  return out;
}

Poly one_var_closed_form(int lam, const Params& params) {
  if (params.n != 1) throw std::invalid_argument("one_var_closed_form: n must be 1");
  params.validate();
  const Rational& w = params.omega;
  auto f11_poly = [&](int s, const Rational& bottom) {
    // sum_{m<=s} [-s]_m / ([bottom]_m m!) (w x^2)^m as a polynomial in x
    Poly acc(1);
    for (int m = 0; m <= s; ++m) {
      Rational c = pochhammer(Rational(-s), m) /
                   (pochhammer(bottom, m) * Rational(factorial(m)));
      c *= rational_pow(w, m);
      Poly::Expo e{};
      e[0] = static_cast<int16_t>(2 * m);
      acc.add_term(e, c);
    }
    return acc;
  };
  if (params.family == Family::A) {
    if (lam % 2 == 0) {
      int s = lam / 2;
      Rational pref = pochhammer(rat(1, 2), s) / rational_pow(-w, s);
      return f11_poly(s, rat(1, 2)) * pref;
    }
    int s = (lam - 1) / 2;
    Rational pref = pochhammer(rat(3, 2), s) / rational_pow(-w, s);
    return f11_poly(s, rat(3, 2)).mul_var_pow(1, 1) * pref;
  }
  Rational bottom = params.g1 + rat(1, 2);
  Rational pref = pochhammer(bottom, lam) / rational_pow(-w, lam);
  return f11_poly(lam, bottom) * pref;
}

}  // namespace calogero
