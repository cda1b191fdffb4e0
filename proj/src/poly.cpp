#include "calogero/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace calogero {

Poly::Poly(int n) : n_(n) {
  if (n < 1 || n > kMaxVars) throw std::invalid_argument("Poly: n out of range");
}

Poly Poly::constant(int n, const Rational& c) {
  Poly p(n);
  Expo e{};
  p.add_term(e, c);
  return p;
}

Poly Poly::variable(int n, int j) {
  Poly p(n);
  Expo e{};
  e[j - 1] = 1;
  p.add_term(e, Rational(1));
  return p;
}

Poly Poly::monomial(int n, const Expo& e, const Rational& c) {
  Poly p(n);
  p.add_term(e, c);
  return p;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (int i = 0; i < n_; ++i) t += e[i];
    d = std::max(d, t);
  }
  return d;
}

Rational Poly::coefficient(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::set_coefficient(const Expo& e, const Rational& c) {
  if (c == 0)
    terms_.erase(e);
  else
    terms_[e] = c;
}

void Poly::add_term(const Expo& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(n_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (n_ != o.n_) throw std::invalid_argument("Poly: nvars mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (n_ != o.n_) throw std::invalid_argument("Poly: nvars mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= q;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Poly: nvars mismatch");
  Poly r(a.n_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Poly::Expo e{};
      for (int i = 0; i < a.n_; ++i)
        e[i] = static_cast<int16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
  for (const auto& [e, c] : terms_) {
    auto it = o.terms_.find(e);
    if (it == o.terms_.end() || it->second != c) return false;
  }
  return true;
}

Poly Poly::derivative(int j) const {
  Poly r(n_);
  int idx = j - 1;
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Expo d = e;
    d[idx] = static_cast<int16_t>(d[idx] - 1);
    r.add_term(d, c * e[idx]);
  }
  return r;
}

Poly Poly::mul_var_pow(int j, int k) const {
  Poly r(n_);
  int idx = j - 1;
  for (const auto& [e, c] : terms_) {
    Expo d = e;
    d[idx] = static_cast<int16_t>(d[idx] + k);
    r.terms_.emplace(d, c);
  }
  return r;
}

Poly Poly::divide_var(int j) const {
  Poly r(n_);
  int idx = j - 1;
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) throw std::domain_error("divide_var: nonzero remainder");
    Expo d = e;
    d[idx] = static_cast<int16_t>(d[idx] - 1);
    r.terms_.emplace(d, c);
  }
  return r;
}

Poly Poly::divide_linear(int j, int k, int sign) const {
  // Synthetic division in x_j by (x_j + sign*x_k): group terms by x_j-degree,
  // then q_{a-1} = c_a - sign * x_k * q_a descending; remainder must vanish.
  int ji = j - 1;
  if (is_zero()) return Poly(n_);
  int maxdeg = 0;
  for (const auto& [e, c] : terms_) maxdeg = std::max(maxdeg, static_cast<int>(e[ji]));
  // c[a] = coefficient polynomial of x_j^a (with x_j exponent zeroed out)
  std::vector<Poly> coef(static_cast<std::size_t>(maxdeg) + 1, Poly(n_));
  for (const auto& [e, c] : terms_) {
    Expo d = e;
    int a = d[ji];
    d[ji] = 0;
    coef[static_cast<std::size_t>(a)].add_term(d, c);
  }
  Poly result(n_);
  Poly carry(n_);  // q_a while descending
  for (int a = maxdeg; a >= 1; --a) {
    Poly qa = coef[static_cast<std::size_t>(a)] + carry;
    result += qa.mul_var_pow(j, a - 1);
    carry = (qa * Rational(-sign)).mul_var_pow(k, 1);
  }
  Poly rem = coef[0] + carry;
  if (!rem.is_zero()) throw std::domain_error("divide_linear: nonzero remainder");
  return result;
}

Poly Poly::squared_vars() const {
  Poly r(n_);
  for (const auto& [e, c] : terms_) {
    Expo d{};
    for (int i = 0; i < n_; ++i) d[i] = static_cast<int16_t>(2 * e[i]);
    r.terms_.emplace(d, c);
  }
  return r;
}

Poly Poly::homogeneous_part(int d) const {
  Poly r(n_);
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (int i = 0; i < n_; ++i) t += e[i];
    if (t == d) r.terms_.emplace(e, c);
  }
  return r;
}

std::vector<int> Poly::homogeneous_degrees() const {
  std::vector<int> degs;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (int i = 0; i < n_; ++i) t += e[i];
    if (std::find(degs.begin(), degs.end(), t) == degs.end()) degs.push_back(t);
  }
  std::sort(degs.begin(), degs.end());
  return degs;
}

Rational Poly::eval(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != n_)
    throw std::invalid_argument("eval: point dimension mismatch");
  // powers[i][k] = x_i^k, built lazily up to the needed degree
  std::vector<std::vector<Rational>> powers(static_cast<std::size_t>(n_), {Rational(1)});
  auto pw = [&](int i, int k) -> const Rational& {
    auto& v = powers[static_cast<std::size_t>(i)];
    while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * x[static_cast<std::size_t>(i)]);
    return v[static_cast<std::size_t>(k)];
  };
  Rational r(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < n_; ++i)
      if (e[i]) t *= pw(i, e[i]);
    r += t;
  }
  return r;
}

double Poly::eval_double(const std::vector<double>& x) const {
  double r = 0;
  for (const auto& [e, c] : terms_) {
    double t = calogero::to_double(c);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[static_cast<std::size_t>(i)];
    r += t;
  }
  return r;
}

bool Poly::is_symmetric() const {
  // Swapping adjacent variables generates S_n; checking transpositions suffices.
  for (int i = 0; i + 1 < n_; ++i) {
    for (const auto& [e, c] : terms_) {
      Expo s = e;
      std::swap(s[i], s[i + 1]);
      if (coefficient(s) != c) return false;
    }
  }
  return true;
}

bool Poly::all_exponents_even() const {
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < n_; ++i)
      if (e[i] % 2 != 0) return false;
  return true;
}

std::vector<std::pair<Poly::Expo, Rational>> Poly::sorted_terms() const {
  std::vector<std::pair<Expo, Rational>> v(terms_.begin(), terms_.end());
  auto deg = [this](const Expo& e) {
    int t = 0;
    for (int i = 0; i < n_; ++i) t += e[i];
    return t;
  };
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    int da = deg(a.first), db = deg(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  return v;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted_terms()) {
    if (!first) os << " + ";
    first = false;
    os << rational_str(c);
    for (int i = 0; i < n_; ++i)
      if (e[i]) {
        os << "*x" << (i + 1);
        if (e[i] > 1) os << "^" << e[i];
      }
  }
  return os.str();
}

}  // namespace calogero
