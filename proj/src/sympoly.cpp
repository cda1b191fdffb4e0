#include "calogero/sympoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace calogero {

Poly msym(const Partition& lam, int n, bool even) {
  if (static_cast<int>(lam.size()) != n)
    throw std::invalid_argument("msym: partition length != n");
  if (!is_partition(lam)) throw std::invalid_argument("msym: not a partition");
  Poly p(n);
  std::vector<int> perm(lam);
  std::sort(perm.begin(), perm.end());
  do {
    Poly::Expo e{};
    for (int i = 0; i < n; ++i)
      e[i] = static_cast<int16_t>(even ? 2 * perm[static_cast<std::size_t>(i)]
                                       : perm[static_cast<std::size_t>(i)]);
    p.add_term(e, Rational(1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return p;
}

Poly elementary_sym_plain(int r, int n) {
  if (r < 1 || r > n) throw std::invalid_argument("elementary_sym: r out of range");
  Poly p(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != r) continue;
    Poly::Expo e{};
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) e[i] = 1;
    p.add_term(e, Rational(1));
  }
  return p;
}

Poly elementary_sym(int r, const Params& params) {
  Poly e = elementary_sym_plain(r, params.n);
  if (params.family == Family::A) return e;
  return e.squared_vars() * rational_pow(-params.omega, r);
}

std::map<Partition, Rational> expand_in_msym(const Poly& p, bool even) {
  if (!p.is_symmetric())
    throw std::invalid_argument("expand_in_msym: polynomial is not symmetric");
  if (even && !p.all_exponents_even())
    throw std::invalid_argument("expand_in_msym: polynomial is not even");
  std::map<Partition, Rational> out;
  Poly rest = p;
  int n = p.nvars();
  while (!rest.is_zero()) {
    // For a symmetric polynomial the graded-lex leading exponent is a partition.
    auto terms = rest.sorted_terms();
    const auto& [e, c] = terms.front();
    Partition mu(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) mu[static_cast<std::size_t>(i)] = even ? e[i] / 2 : e[i];
    if (!is_partition(mu))
      throw std::invalid_argument("expand_in_msym: leading exponent not a partition");
    out[mu] = c;
    rest -= msym(mu, n, even) * c;
  }
  return out;
}

Poly dd_minus_pair(const Poly& p, int j, int k) {
  return (p.derivative(j) - p.derivative(k)).divide_linear(j, k, -1);
}

Poly dd_plus_pair(const Poly& p, int j, int k) {
  return (p.derivative(j) + p.derivative(k)).divide_linear(j, k, +1);
}

Poly dd_inv_x(const Poly& p, int j) { return p.derivative(j).divide_var(j); }

namespace {

long long as_nonneg_int(const Rational& q, const char* what) {
  if (boost::multiprecision::denominator(q) != 1 || q < 0)
    throw std::invalid_argument(std::string(what) + " must be a nonnegative integer, got " +
                                rational_str(q));
  return boost::multiprecision::numerator(q).convert_to<long long>();
}

Poly poly_pow(const Poly& base, long long k) {
  Poly acc = Poly::constant(base.nvars(), Rational(1));
  for (long long i = 0; i < k; ++i) acc = acc * base;
  return acc;
}

std::string weight_key(const Params& p) {
  return std::string(1, family_char(p.family)) + "|" + std::to_string(p.n) + "|" +
         rational_str(p.g0) + "|" + rational_str(p.g1);
}

}  // namespace

const Poly& weight_polynomial(const Params& params) {
  static std::map<std::string, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::string key = weight_key(params);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  long long g0 = as_nonneg_int(params.g0, "g0");
  int n = params.n;
  Poly w = Poly::constant(n, Rational(1));
  if (params.family == Family::A) {
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        Poly d = Poly::variable(n, j) - Poly::variable(n, k);
        w = w * poly_pow(d, 2 * g0);
      }
  } else {
    long long g1 = as_nonneg_int(params.g1, "g1");
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        Poly d = Poly::variable(n, j).mul_var_pow(j, 1) -
                 Poly::variable(n, k).mul_var_pow(k, 1);  // x_j^2 - x_k^2
        w = w * poly_pow(d, 2 * g0);
      }
    for (int j = 1; j <= n; ++j) w = w.mul_var_pow(j, static_cast<int>(2 * g1));
  }
  return cache.emplace(key, std::move(w)).first->second;
}

namespace {

// Sum over terms of p of c * prod_i (2k_i - 1)!! (2 omega)^(-k_i); odd
// exponents integrate to zero and are skipped.
Rational moment_rational_sum(const Poly& p, const Rational& omega) {
  Rational two_omega_inv = Rational(1) / (2 * omega);
  std::vector<Rational> pow_cache{Rational(1)};
  auto tw = [&](int k) -> const Rational& {
    while (static_cast<int>(pow_cache.size()) <= k)
      pow_cache.push_back(pow_cache.back() * two_omega_inv);
    return pow_cache[static_cast<std::size_t>(k)];
  };
  Rational sum(0);
  for (const auto& [e, c] : p.terms()) {
    bool odd = false;
    Rational t = c;
    for (int i = 0; i < p.nvars(); ++i) {
      if (e[i] % 2) {
        odd = true;
        break;
      }
      int k = e[i] / 2;
      if (k) t *= Rational(double_factorial_odd(k)) * tw(k);
    }
    if (!odd) sum += t;
  }
  return sum;
}

}  // namespace

ExactScalar gaussian_moment(const Poly& p, const Params& params) {
  params.validate();
  const Poly& w = weight_polynomial(params);
  Rational sum = moment_rational_sum(p * w, params.omega);
  // each variable contributes sqrt(pi/omega)
  ExactScalar pref = ExactScalar::pi_half_pow(params.n, params.omega) *
                     ExactScalar::omega_half_pow(-params.n, params.omega);
  return pref * sum;
}

ExactScalar gram_inner(const Poly& f, const Poly& g, const Params& params) {
  return gaussian_moment(f * g, params);
}

GramTable::GramTable(const Params& params) : params_(params) {
  params_.validate();
  even_ = params_.family == Family::B;
  weight_polynomial(params_);  // force the cache entry up front
}

ExactScalar GramTable::inner_msym(const Partition& mu, const Partition& nu) {
  std::pair<Partition, Partition> key = mu <= nu ? std::make_pair(mu, nu)
                                                 : std::make_pair(nu, mu);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  ExactScalar val(params_.omega);
  if (params_.family == Family::A && (weight(mu) + weight(nu)) % 2 != 0) {
    // odd total degree: zero by parity
  } else {
    Poly prod = msym(key.first, params_.n, even_) * msym(key.second, params_.n, even_);
    val = gaussian_moment(prod, params_);
  }
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(key, std::move(val)).first->second;
}

ExactScalar GramTable::inner_expanded(const std::map<Partition, Rational>& a,
                                      const std::map<Partition, Rational>& b) {
  ExactScalar sum(params_.omega);
  for (const auto& [mu, ca] : a)
    for (const auto& [nu, cb] : b) sum += inner_msym(mu, nu) * (ca * cb);
  return sum;
}

}  // namespace calogero
