#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "kellerscope/errors.hpp"
#include "kellerscope/matrix.hpp"
#include "kellerscope/rat.hpp"

namespace kellerscope {

inline bool coeff_is_zero(const Rat& r) { return r.is_zero(); }
inline std::string coeff_str(const Rat& r) { return r.str(); }
inline Rat exact_div(const Rat& a, const Rat& b) { return a / b; }

// Dense univariate polynomial with ascending coefficients and a variable tag.
// K is a field or an integral domain with exact division (see exact_div).
template <class K>
class UniPoly {
public:
  UniPoly() : var_("x") {}
  explicit UniPoly(std::string var) : var_(std::move(var)) {}
  UniPoly(int c) : var_("x") { if (c != 0) c_.push_back(K(c)); }
  UniPoly(std::string var, std::vector<K> ascending) : var_(std::move(var)), c_(std::move(ascending)) {
    trim();
  }

  static UniPoly constant(std::string var, K c) {
    UniPoly p(std::move(var));
    if (!coeff_is_zero(c)) p.c_.push_back(std::move(c));
    return p;
  }
  static UniPoly variable(std::string var) {
    UniPoly p(std::move(var));
    p.c_ = {K(0), K(1)};
    return p;
  }
  static UniPoly monomial(std::string var, K c, int e) {
    UniPoly p(std::move(var));
    require(e >= 0, "monomial with negative exponent");
    if (!coeff_is_zero(c)) {
      p.c_.assign(static_cast<std::size_t>(e) + 1, K(0));
      p.c_.back() = std::move(c);
    }
    return p;
  }

  const std::string& var() const { return var_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const K& lc() const {
    ensure(!c_.empty(), "lc of zero polynomial");
    return c_.back();
  }
  K coeff(int e) const {
    if (e < 0 || e >= static_cast<int>(c_.size())) return K(0);
    return c_[static_cast<std::size_t>(e)];
  }
  const std::vector<K>& coeffs() const { return c_; }

  void set_coeff(int e, K v) {
    require(e >= 0, "negative exponent");
    if (e >= static_cast<int>(c_.size())) {
      if (coeff_is_zero(v)) return;
      c_.resize(static_cast<std::size_t>(e) + 1, K(0));
    }
    c_[static_cast<std::size_t>(e)] = std::move(v);
    trim();
  }

  UniPoly operator-() const {
    UniPoly r(var_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(K(0) - c);
    return r;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    a.check_var(b);
    UniPoly r(pick_var(a, b));
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
    r.trim();
    return r;
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    a.check_var(b);
    if (a.is_zero() || b.is_zero()) return UniPoly(pick_var(a, b));
    require(a.degree() + b.degree() < (1 << 26), "polynomial degree overflow");
    UniPoly r(pick_var(a, b));
    r.c_.assign(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (coeff_is_zero(b.c_[j])) continue;
        r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
      }
    }
    r.trim();
    return r;
  }

  UniPoly scaled(const K& s) const {
    UniPoly r(var_);
    if (coeff_is_zero(s)) return r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(c * s);
    r.trim();
    return r;
  }

  UniPoly shifted_up(int k) const {  // multiply by var^k
    require(k >= 0, "negative shift");
    if (is_zero()) return *this;
    UniPoly r(var_);
    r.c_.assign(c_.size() + static_cast<std::size_t>(k), K(0));
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
  }

  UniPoly pow(int e) const {
    require(e >= 0, "negative polynomial power");
    UniPoly r = UniPoly::constant(var_, K(1));
    UniPoly base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = (e >>= 1) > 0 ? base * base : base;
    }
    return r;
  }

  UniPoly derivative() const {
    UniPoly r(var_);
    if (c_.size() <= 1) return r;
    r.c_.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * K(static_cast<int>(i)));
    r.trim();
    return r;
  }

  // Field-coefficient division with remainder.
  friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    a.check_var(b);
    require(!b.is_zero(), "polynomial division by zero");
    UniPoly q(a.var_), r = a;
    if (a.degree() < b.degree()) return {q, r};
    q.c_.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, K(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
      K f = r.lc() / b.lc();
      int d = r.degree() - b.degree();
      q.c_[static_cast<std::size_t>(d)] = f;
      for (std::size_t i = 0; i < b.c_.size(); ++i)
        r.c_[i + static_cast<std::size_t>(d)] = r.c_[i + static_cast<std::size_t>(d)] - f * b.c_[i];
      r.trim();
    }
    q.trim();
    return {q, r};
  }

  template <class T>
  T eval(const T& x) const {
    T acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + T(c_[i]);
    return acc;
  }

  UniPoly compose(const UniPoly& inner) const {
    UniPoly acc(inner.var());
    for (std::size_t i = c_.size(); i-- > 0;)
      acc = acc * inner + UniPoly::constant(inner.var(), c_[i]);
    return acc;
  }

  UniPoly with_var(std::string v) const {
    UniPoly r = *this;
    r.var_ = std::move(v);
    return r;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!coeff_is_zero(a.c_[i] - b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (coeff_is_zero(c_[i])) continue;
      std::string cs = coeff_str(c_[i]);
      // Fold a plain leading minus into the separator.
      bool negative = !cs.empty() && cs[0] == '-' &&
                      cs.find_first_of("+- ", 1) == std::string::npos;
      if (negative) cs = cs.substr(1);
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      bool wrap = cs.find_first_of("+- ") != std::string::npos && cs.size() > 1;
      if (i == 0) {
        out += wrap ? "(" + cs + ")" : cs;
      } else {
        if (cs != "1") out += (wrap ? "(" + cs + ")" : cs) + "*";
        out += var_;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

  void check_var(const UniPoly& other) const {
    if (var_ != other.var_ && !is_constant() && !other.is_constant())
      throw UsageError("variable-tag mismatch: '" + var_ + "' vs '" + other.var_ + "'");
  }

  static const std::string& pick_var(const UniPoly& a, const UniPoly& b) {
    return (a.is_constant() && !b.is_constant()) ? b.var_ : a.var_;
  }

private:
  std::string var_;
  std::vector<K> c_;

  void trim() {
    while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
  }
};

template <class K>
bool coeff_is_zero(const UniPoly<K>& p) { return p.is_zero(); }
template <class K>
std::string coeff_str(const UniPoly<K>& p) { return p.str(); }

// Exact division in K[x]; valid for any K with exact_div on coefficients,
// provided the division is known to be exact. Errors when it is not.
template <class K>
UniPoly<K> exact_div(const UniPoly<K>& a, const UniPoly<K>& b) {
  a.check_var(b);
  require(!b.is_zero(), "polynomial division by zero");
  if (a.is_zero()) return a;
  ensure(a.degree() >= b.degree(), "inexact polynomial division");
  const std::string var = UniPoly<K>::pick_var(a, b);
  UniPoly<K> q(var), r = a.with_var(var);
  const UniPoly<K> d0 = b.with_var(var);
  while (!r.is_zero() && r.degree() >= d0.degree()) {
    K f = exact_div(r.lc(), d0.lc());
    int d = r.degree() - d0.degree();
    q.set_coeff(d, f);
    r = r - d0.shifted_up(d).scaled(f);
  }
  ensure(r.is_zero(), "inexact polynomial division");
  return q;
}

// Monic gcd over a field.
template <class K>
UniPoly<K> gcd_poly(UniPoly<K> a, UniPoly<K> b) {
  a.check_var(b);
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
    if (!b.is_zero()) b = b.scaled(K(1) / b.lc());  // keep remainders monic to limit growth
  }
  if (a.is_zero()) return a;
  return a.scaled(K(1) / a.lc());
}

template <class K>
UniPoly<K> squarefree_part_field(const UniPoly<K>& f) {
  if (f.is_zero() || f.degree() == 0) return f;
  UniPoly<K> g = gcd_poly(f, f.derivative());
  if (g.degree() <= 0) return f.scaled(K(1) / f.lc());
  UniPoly<K> r = exact_div(f, g);
  return r.scaled(K(1) / r.lc());
}

// Yun squarefree decomposition over a field of characteristic 0. Parts are
// monic with strictly increasing multiplicities; lc(f) * prod part^mult == f.
template <class K>
std::vector<std::pair<UniPoly<K>, int>> yun_field(const UniPoly<K>& f0) {
  require(!f0.is_zero(), "squarefree decomposition of zero");
  std::vector<std::pair<UniPoly<K>, int>> out;
  UniPoly<K> f = f0.scaled(K(1) / f0.lc());
  if (f.degree() <= 0) return out;
  UniPoly<K> g = gcd_poly(f, f.derivative());
  UniPoly<K> w = exact_div(f, g), y = exact_div(f.derivative(), g);
  for (int m = 1; w.degree() > 0; ++m) {
    UniPoly<K> z = y - w.derivative();
    UniPoly<K> p = gcd_poly(w, z);  // nonzero since w is nonzero
    if (p.degree() > 0) out.emplace_back(p, m);
    w = exact_div(w, p);
    y = exact_div(z, p);
  }
  return out;
}

// Sylvester matrix with deg(g) rows of f above deg(f) rows of g, coefficients
// descending. resultant(x^2 - t, x) = -t under this convention.
template <class K>
std::vector<std::vector<K>> sylvester_matrix(const UniPoly<K>& f, const UniPoly<K>& g) {
  f.check_var(g);
  const int m = f.degree(), n = g.degree();
  ensure(m >= 0 && n >= 0, "sylvester of zero polynomial");
  const int sz = m + n;
  std::vector<std::vector<K>> mat(static_cast<std::size_t>(sz),
                                  std::vector<K>(static_cast<std::size_t>(sz), K(0)));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) mat[r][r + j] = f.coeff(m - j);
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) mat[n + r][r + j] = g.coeff(n - j);
  return mat;
}

// Resultant via Bareiss on the Sylvester matrix. Degenerate degrees follow the
// classical conventions: res(f, c) = c^deg f, res(c, g) = c^deg g, res(c, d) = 1.
template <class K>
K resultant(const UniPoly<K>& f, const UniPoly<K>& g) {
  require(!(f.is_zero() && g.is_zero()), "resultant of two zero polynomials");
  if (f.is_zero() || g.is_zero()) return K(0);
  const int m = f.degree(), n = g.degree();
  if (m == 0 && n == 0) return K(1);
  if (n == 0) {
    K c = g.lc(), r(1);
    for (int i = 0; i < m; ++i) r = r * c;
    return r;
  }
  if (m == 0) {
    K c = f.lc(), r(1);
    for (int i = 0; i < n; ++i) r = r * c;
    return r;
  }
  auto mat = sylvester_matrix(f, g);
  return bareiss_det(
      std::move(mat), [](K a, const K& b) { return exact_div(a, b); },
      [](const K& a) { return coeff_is_zero(a); });
}

}  // namespace kellerscope
