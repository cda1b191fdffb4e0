#include "calogero/operators.hpp"

#include "calogero/harmonics.hpp"

#include <cmath>
#include <stdexcept>

namespace calogero {

Poly apply_D1(const Poly& p, const Params& params) {
  params.validate();
  if (!p.is_symmetric()) throw std::invalid_argument("apply_D1: input not symmetric");
  if (params.family == Family::B && !p.all_exponents_even())
    throw std::invalid_argument("apply_D1: family B input not even");
  Poly r(p.nvars());
  for (int j = 1; j <= params.n; ++j)
    r += p.derivative(j).mul_var_pow(j, 1) * (2 * params.omega);
  r -= apply_L(p, params);
  return r;
}

Rational eigenvalue_E(int r, const Partition& lam, const Params& params) {
  if (r < 1 || r > params.n) throw std::invalid_argument("eigenvalue_E: r out of range");
  Rational scale = params.family == Family::A ? 2 * params.omega : 4 * params.omega;
  return rational_pow(scale, r) * Rational(elementary_symmetric_parts(r, lam));
}

Rational difference_operator_eigenvalue(int r, const Partition& lam, const Params& params) {
  if (r < 1 || r > params.n) throw std::invalid_argument("r out of range");
  int n = params.n;
  // sum over r-subsets j_1 < ... < j_r of prod_a (lam_{j_a} + (r-a) g0)
  std::vector<int> comb(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) comb[static_cast<std::size_t>(i)] = i;
  Rational sum(0);
  while (true) {
    Rational prod(1);
    for (int a = 0; a < r; ++a)
      prod *= Rational(lam[static_cast<std::size_t>(comb[static_cast<std::size_t>(a)])]) +
              params.g0 * (r - 1 - a);
    sum += prod;
    int pos = r - 1;
    while (pos >= 0 && comb[static_cast<std::size_t>(pos)] == n - r + pos) --pos;
    if (pos < 0) break;
    ++comb[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < r; ++i)
      comb[static_cast<std::size_t>(i)] = comb[static_cast<std::size_t>(i - 1)] + 1;
  }
  Rational scale = params.family == Family::A ? 2 * params.omega : 4 * params.omega;
  return rational_pow(scale, r) * sum;
}

Rational ground_energy(const Params& params) {
  params.validate();
  int n = params.n;
  if (params.family == Family::A)
    return params.omega * n * (Rational(1) + params.g0 * (n - 1));
  return params.omega * n * (Rational(1) + 2 * params.g0 * (n - 1) + 2 * params.g1);
}

namespace {

struct FactorEval {
  const Params& params;
  const Rational& s;

  Rational v(const Rational& z) const {
    if (z == 0) throw NonGeneric("difference operator: zero v-denominator");
    return Rational(1) - s * params.g0 / z;
  }
  Rational wA(const Rational& z) const { return Rational(1) + s * params.omega * z; }
  Rational wB(const Rational& z) const {
    if (z == 0) throw NonGeneric("difference operator: zero w-denominator");
    return (Rational(1) - s * params.g1 / z) * (Rational(1) + s * params.omega * z);
  }
};

// Iterate three-way assignments of indices in `pool`: 0 = unused, 1, 2.
// Calls f(setsA, setsB) for every assignment (including empty ones).
template <typename F>
void for_each_signed_pair(const std::vector<int>& pool, int max_total, F&& f) {
  std::size_t m = pool.size();
  std::vector<int> state(m, 0);
  std::vector<int> plus, minus;
  while (true) {
    plus.clear();
    minus.clear();
    for (std::size_t i = 0; i < m; ++i) {
      if (state[i] == 1) plus.push_back(pool[i]);
      if (state[i] == 2) minus.push_back(pool[i]);
    }
    if (static_cast<int>(plus.size() + minus.size()) <= max_total) f(plus, minus);
    std::size_t pos = 0;
    while (pos < m && state[pos] == 2) state[pos++] = 0;
    if (pos == m) break;
    ++state[pos];
  }
}

Rational uA(const std::vector<int>& K, int p, const std::vector<Rational>& x,
            const FactorEval& fe) {
  if (p == 0) return Rational(1);
  Rational sum(0);
  for_each_signed_pair(K, p, [&](const std::vector<int>& Lp, const std::vector<int>& Lm) {
    if (static_cast<int>(Lp.size() + Lm.size()) != p) return;
    Rational t(1);
    for (int l : Lp) t *= fe.wA(x[static_cast<std::size_t>(l)]);
    for (int l : Lm) t *= fe.wA(-x[static_cast<std::size_t>(l)]);
    for (int l : Lp)
      for (int lp : Lm) {
        t *= fe.v(x[static_cast<std::size_t>(l)] - x[static_cast<std::size_t>(lp)]);
        t *= fe.v(x[static_cast<std::size_t>(lp)] - x[static_cast<std::size_t>(l)] + fe.s);
      }
    for (int k : K) {
      bool in_l = false;
      for (int l : Lp)
        if (l == k) in_l = true;
      for (int l : Lm)
        if (l == k) in_l = true;
      if (in_l) continue;
      for (int l : Lp) t *= fe.v(x[static_cast<std::size_t>(l)] - x[static_cast<std::size_t>(k)]);
      for (int l : Lm) t *= fe.v(x[static_cast<std::size_t>(k)] - x[static_cast<std::size_t>(l)]);
    }
    sum += t;
  });
  return (p % 2 ? -sum : sum);
}

Rational uB(const std::vector<int>& K, int p, const std::vector<Rational>& x,
            const FactorEval& fe) {
  if (p == 0) return Rational(1);
  Rational sum(0);
  for_each_signed_pair(K, p, [&](const std::vector<int>& Lp, const std::vector<int>& Lm) {
    if (static_cast<int>(Lp.size() + Lm.size()) != p) return;
    // signed set L with eps = +1 on Lp, -1 on Lm
    std::vector<std::pair<int, int>> L;
    for (int l : Lp) L.emplace_back(l, +1);
    for (int l : Lm) L.emplace_back(l, -1);
    Rational t(1);
    for (const auto& [l, e] : L) t *= fe.wB(Rational(e) * x[static_cast<std::size_t>(l)]);
    for (std::size_t a = 0; a < L.size(); ++a)
      for (std::size_t b = a + 1; b < L.size(); ++b) {
        auto [l, el] = L[a];
        auto [lp, elp] = L[b];
        Rational z = Rational(el) * x[static_cast<std::size_t>(l)] +
                     Rational(elp) * x[static_cast<std::size_t>(lp)];
        t *= fe.v(z) * fe.v(-z + fe.s);
      }
    for (int k : K) {
      bool in_l = false;
      for (const auto& [l, e] : L)
        if (l == k) in_l = true;
      if (in_l) continue;
      for (const auto& [l, e] : L) {
        Rational base = Rational(e) * x[static_cast<std::size_t>(l)];
        t *= fe.v(base + x[static_cast<std::size_t>(k)]) * fe.v(base - x[static_cast<std::size_t>(k)]);
      }
    }
    sum += t;
  });
  return (p % 2 ? -sum : sum);
}

}  // namespace

Rational difference_eval(const Poly& p, int r, const Rational& s,
                         const std::vector<Rational>& x, const Params& params) {
  params.validate();
  if (r < 1 || r > params.n) throw std::invalid_argument("difference_eval: r out of range");
  if (static_cast<int>(x.size()) != params.n)
    throw std::invalid_argument("difference_eval: point dimension mismatch");
  FactorEval fe{params, s};
  std::vector<int> all;
  for (int i = 0; i < params.n; ++i) all.push_back(i);

  Rational total(0);
  for_each_signed_pair(all, r, [&](const std::vector<int>& Jp, const std::vector<int>& Jm) {
    int t = static_cast<int>(Jp.size() + Jm.size());
    std::vector<int> K;
    for (int i : all) {
      bool used = false;
      for (int j : Jp)
        if (j == i) used = true;
      for (int j : Jm)
        if (j == i) used = true;
      if (!used) K.push_back(i);
    }
    Rational V(1);
    std::vector<Rational> shifted = x;
    if (params.family == Family::A) {
      for (int j : Jp) {
        V *= fe.wA(x[static_cast<std::size_t>(j)]);
        shifted[static_cast<std::size_t>(j)] -= s;
      }
      for (int j : Jm) {
        V *= fe.wA(-x[static_cast<std::size_t>(j)]);
        shifted[static_cast<std::size_t>(j)] += s;
      }
      for (int j : Jp)
        for (int jp : Jm) {
          Rational z = x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(jp)];
          V *= fe.v(z) * fe.v(z - s);
        }
      for (int j : Jp)
        for (int k : K) V *= fe.v(x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(k)]);
      for (int j : Jm)
        for (int k : K) V *= fe.v(x[static_cast<std::size_t>(k)] - x[static_cast<std::size_t>(j)]);
      V *= uA(K, r - t, x, fe);
    } else {
      // signed set J: eps = +1 on Jp (shift x - s), -1 on Jm (shift x + s)
      std::vector<std::pair<int, int>> J;
      for (int j : Jp) J.emplace_back(j, +1);
      for (int j : Jm) J.emplace_back(j, -1);
      for (const auto& [j, e] : J) {
        V *= fe.wB(Rational(e) * x[static_cast<std::size_t>(j)]);
        shifted[static_cast<std::size_t>(j)] -= Rational(e) * s;
      }
      for (std::size_t a = 0; a < J.size(); ++a)
        for (std::size_t b = a + 1; b < J.size(); ++b) {
          Rational z = Rational(J[a].second) * x[static_cast<std::size_t>(J[a].first)] +
                       Rational(J[b].second) * x[static_cast<std::size_t>(J[b].first)];
          V *= fe.v(z) * fe.v(z - s);
        }
      for (const auto& [j, e] : J) {
        Rational base = Rational(e) * x[static_cast<std::size_t>(j)];
        for (int k : K)
          V *= fe.v(base + x[static_cast<std::size_t>(k)]) * fe.v(base - x[static_cast<std::size_t>(k)]);
      }
      V *= uB(K, r - t, x, fe);
    }
    total += V * p.eval(shifted);
  });
  return total;
}

Rational difference_eval_r1_direct(const Poly& p, const Rational& s,
                                   const std::vector<Rational>& x, const Params& params) {
  FactorEval fe{params, s};
  Rational total(0);
  Rational px = p.eval(x);
  for (int j = 0; j < params.n; ++j) {
    Rational plus(1), minus(1);
    if (params.family == Family::A) {
      plus = fe.wA(x[static_cast<std::size_t>(j)]);
      minus = fe.wA(-x[static_cast<std::size_t>(j)]);
      for (int k = 0; k < params.n; ++k) {
        if (k == j) continue;
        plus *= fe.v(x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(k)]);
        minus *= fe.v(x[static_cast<std::size_t>(k)] - x[static_cast<std::size_t>(j)]);
      }
    } else {
      plus = fe.wB(x[static_cast<std::size_t>(j)]);
      minus = fe.wB(-x[static_cast<std::size_t>(j)]);
      for (int k = 0; k < params.n; ++k) {
        if (k == j) continue;
        plus *= fe.v(x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(k)]) *
                fe.v(x[static_cast<std::size_t>(j)] + x[static_cast<std::size_t>(k)]);
        minus *= fe.v(-x[static_cast<std::size_t>(j)] + x[static_cast<std::size_t>(k)]) *
                 fe.v(-x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(k)]);
      }
    }
    std::vector<Rational> xp = x, xm = x;
    xp[static_cast<std::size_t>(j)] -= s;
    xm[static_cast<std::size_t>(j)] += s;
    total += plus * (p.eval(xp) - px) + minus * (p.eval(xm) - px);
  }
  return total;
}

namespace {

// Denominator polynomial in s collecting every s-dependent v-denominator root.
std::vector<Rational> denominator_coeffs(const std::vector<Rational>& x, const Params& params) {
  std::vector<Rational> roots;
  int n = params.n;
  if (params.family == Family::A) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b) roots.push_back(x[static_cast<std::size_t>(a)] - x[static_cast<std::size_t>(b)]);
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int sa : {1, -1})
          for (int sb : {1, -1})
            roots.push_back(Rational(sa) * x[static_cast<std::size_t>(a)] +
                            Rational(sb) * x[static_cast<std::size_t>(b)]);
  }
  // prod (root_i - s), ascending powers of s
  std::vector<Rational> den{Rational(1)};
  for (const auto& root : roots) {
    std::vector<Rational> next(den.size() + 1, Rational(0));
    for (std::size_t i = 0; i < den.size(); ++i) {
      next[i] += den[i] * root;
      next[i + 1] -= den[i];
    }
    den = std::move(next);
  }
  return den;
}

Rational eval_coeffs(const std::vector<Rational>& c, const Rational& s) {
  Rational acc(0);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * s + c[i];
  return acc;
}

// Newton interpolation -> monomial coefficients.
std::vector<Rational> interpolate(const std::vector<Rational>& nodes,
                                  const std::vector<Rational>& values) {
  std::size_t n = nodes.size();
  std::vector<Rational> divided = values;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      divided[i] = (divided[i] - divided[i - 1]) / (nodes[i] - nodes[i - level]);
      if (i == level) break;
    }
  std::vector<Rational> coeffs{divided[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // coeffs <- coeffs*(s - nodes[i]) + divided[i]
    std::vector<Rational> next(coeffs.size() + 1, Rational(0));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= coeffs[j] * nodes[i];
    }
    next[0] += divided[i];
    coeffs = std::move(next);
  }
  return coeffs;
}

}  // namespace

std::vector<Rational> difference_series(const Poly& p, int r,
                                        const std::vector<Rational>& x,
                                        const Params& params) {
  std::vector<Rational> den = denominator_coeffs(x, params);
  int deg_den = static_cast<int>(den.size()) - 1;
  int n = params.n;
  int deg_p = std::max(p.total_degree(), 0);
  int bound = deg_den + (params.family == Family::A ? r : 2 * r) + 3 * n * n + deg_p + 2;

  for (int attempt = 0; attempt < 3; ++attempt, bound *= 2) {
    std::vector<Rational> nodes, values;
    int numerator_points = bound + 1;
    int extra = 2;
    long long i = 1;
    const long long q = 1009;
    while (static_cast<int>(nodes.size()) < numerator_points + extra) {
      Rational s(i, q);
      ++i;
      if (i > 40 * (numerator_points + extra)) break;  // give up, caller sees mismatch
      if (eval_coeffs(den, s) == 0) continue;
      Rational val;
      try {
        val = difference_eval(p, r, s, x, params);
      } catch (const NonGeneric&) {
        continue;
      }
      nodes.push_back(s);
      values.push_back(val * eval_coeffs(den, s));
    }
    if (static_cast<int>(nodes.size()) < numerator_points + extra)
      throw NonGeneric("difference_series: not enough admissible nodes");

    std::vector<Rational> fit_nodes(nodes.begin(), nodes.begin() + numerator_points);
    std::vector<Rational> fit_values(values.begin(), values.begin() + numerator_points);
    std::vector<Rational> num = interpolate(fit_nodes, fit_values);
    bool consistent = true;
    for (int e = 0; e < extra; ++e) {
      std::size_t idx = static_cast<std::size_t>(numerator_points + e);
      if (eval_coeffs(num, nodes[idx]) != values[idx]) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;  // raise the degree bound and retry

    // power series division num/den to order 2r
    std::vector<Rational> series(static_cast<std::size_t>(2 * r) + 1, Rational(0));
    for (std::size_t k = 0; k < series.size(); ++k) {
      Rational acc = k < num.size() ? num[k] : Rational(0);
      for (std::size_t j = 1; j <= k && j < den.size(); ++j)
        acc -= den[j] * series[k - j];
      series[k] = acc / den[0];
    }
    return series;
  }
  throw std::runtime_error("difference_series: interpolation degree overflow");
}

EigenSeriesCheck difference_eigen_check(const Partition& lam, int r,
                                        const std::vector<Rational>& x,
                                        const Params& params) {
  const OrthoPoly& p = construct_poly(lam, params);
  std::vector<Rational> series = difference_series(p.poly, r, x, params);
  EigenSeriesCheck out;
  out.prefix_zero = true;
  for (int k = 0; k < 2 * r; ++k)
    if (series[static_cast<std::size_t>(k)] != 0) out.prefix_zero = false;
  Rational px = p.poly.eval(x);
  Rational sign = r % 2 ? Rational(-1) : Rational(1);
  out.leading_matches = series[static_cast<std::size_t>(2 * r)] ==
                        sign * difference_operator_eigenvalue(r, lam, params) * px;
  out.plain_er_matches = series[static_cast<std::size_t>(2 * r)] ==
                         sign * eigenvalue_E(r, lam, params) * px;
  return out;
}

double weight_value(const std::vector<double>& x, const Params& params) {
  double g0 = to_double(params.g0), g1 = to_double(params.g1), w = to_double(params.omega);
  int n = params.n;
  double val = 1.0;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      double d = params.family == Family::A
                     ? std::abs(x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(k)])
                     : std::abs((x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(k)]) *
                                (x[static_cast<std::size_t>(j)] + x[static_cast<std::size_t>(k)]));
      val *= std::pow(d, 2 * g0);
    }
  for (int j = 0; j < n; ++j) {
    if (params.family == Family::B) val *= std::pow(std::abs(x[static_cast<std::size_t>(j)]), 2 * g1);
    val *= std::exp(-w * x[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)]);
  }
  return val;
}

double wavefunction_eval(const Partition& lam, const std::vector<double>& x,
                         const Params& params) {
  const OrthoPoly& p = construct_poly(lam, params);
  return std::sqrt(weight_value(x, params)) * p.poly.eval_double(x);
}

double hamiltonian_residual(const Partition& lam, const std::vector<double>& x,
                            double h, const Params& params) {
  int n = params.n;
  const double eps = 1e-8;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      if (std::abs(x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(k)]) < eps)
        throw std::invalid_argument("hamiltonian_residual: singular point");
      if (params.family == Family::B &&
          std::abs(x[static_cast<std::size_t>(j)] + x[static_cast<std::size_t>(k)]) < eps)
        throw std::invalid_argument("hamiltonian_residual: singular point");
    }
    if (params.family == Family::B && std::abs(x[static_cast<std::size_t>(j)]) < eps)
      throw std::invalid_argument("hamiltonian_residual: singular point");
  }
  double g0 = to_double(params.g0), g1 = to_double(params.g1), w = to_double(params.omega);
  double psi = wavefunction_eval(lam, x, params);
  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    std::vector<double> xp = x, xm = x;
    xp[static_cast<std::size_t>(j)] += h;
    xm[static_cast<std::size_t>(j)] -= h;
    double second = (wavefunction_eval(lam, xp, params) - 2.0 * psi +
                     wavefunction_eval(lam, xm, params)) /
                    (h * h);
    acc += -second + w * w * x[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)] * psi;
    if (params.family == Family::B)
      acc += g1 * (g1 - 1) / (x[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)]) * psi;
  }
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      double dm = x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(k)];
      double contrib = 1.0 / (dm * dm);
      if (params.family == Family::B) {
        double dp = x[static_cast<std::size_t>(j)] + x[static_cast<std::size_t>(k)];
        contrib += 1.0 / (dp * dp);
      }
      acc += 2.0 * g0 * (g0 - 1) * contrib * psi;
    }
  acc -= to_double(ground_energy(params)) * psi;
  double e1 = to_double(eigenvalue_E(1, lam, params));
  return std::abs(acc - e1 * psi);
}

}  // namespace calogero
