#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "kellerscope/ratfunc.hpp"
#include "kellerscope/unipoly.hpp"

namespace kellerscope {

// Sparse bivariate polynomial over Q. Terms map exponent pairs (i,j) for
// vx^i * vy^j to nonzero coefficients; the map never stores zeros.
class BiPoly {
public:
  using Key = std::pair<int, int>;

  BiPoly() : vx_("x"), vy_("y") {}
  BiPoly(int c) : vx_("x"), vy_("y") {
    if (c != 0) terms_[{0, 0}] = Rat(c);
  }
  explicit BiPoly(Rat c) : vx_("x"), vy_("y") {
    if (!c.is_zero()) terms_[{0, 0}] = std::move(c);
  }
  BiPoly(std::string vx, std::string vy) : vx_(std::move(vx)), vy_(std::move(vy)) {
    require(vx_ != vy_, "bivariate polynomial needs two distinct variables");
  }

  static BiPoly constant(Rat c, std::string vx = "x", std::string vy = "y") {
    BiPoly p(std::move(vx), std::move(vy));
    if (!c.is_zero()) p.terms_[{0, 0}] = std::move(c);
    return p;
  }
  static BiPoly var_x(std::string vx = "x", std::string vy = "y") {
    return monomial(Rat(1), 1, 0, std::move(vx), std::move(vy));
  }
  static BiPoly var_y(std::string vx = "x", std::string vy = "y") {
    return monomial(Rat(1), 0, 1, std::move(vx), std::move(vy));
  }
  static BiPoly monomial(Rat c, int i, int j, std::string vx = "x", std::string vy = "y") {
    require(i >= 0 && j >= 0, "negative exponent in monomial");
    BiPoly p(std::move(vx), std::move(vy));
    if (!c.is_zero()) p.terms_[{i, j}] = std::move(c);
    return p;
  }

  const std::string& xname() const { return vx_; }
  const std::string& yname() const { return vy_; }
  const std::map<Key, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
  }
  Rat constant_value() const {
    ensure(is_constant(), "constant_value of non-constant polynomial");
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
  }

  int total_degree() const {  // -1 for zero
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
  }
  int deg_x() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
  }
  int deg_y() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
  }

  Rat coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rat(0) : it->second;
  }
  void add_term(int i, int j, const Rat& c) {
    require(i >= 0 && j >= 0, "negative exponent");
    if (c.is_zero()) return;
    auto it = terms_.find({i, j});
    if (it == terms_.end()) {
      terms_[{i, j}] = c;
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BiPoly operator-() const {
    BiPoly r(vx_, vy_);
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
  }
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    a.check_vars(b);
    BiPoly r = a.is_constant() && !b.is_constant() ? BiPoly(b.vx_, b.vy_) : BiPoly(a.vx_, a.vy_);
    r.terms_ = a.terms_;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
    return r;
  }
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    a.check_vars(b);
    BiPoly r = a.is_constant() && !b.is_constant() ? BiPoly(b.vx_, b.vy_) : BiPoly(a.vx_, a.vy_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        require(ka.first + kb.first >= 0 && ka.second + kb.second >= 0, "exponent overflow");
        r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
      }
    return r;
  }
  BiPoly scaled(const Rat& s) const {
    BiPoly r(vx_, vy_);
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.terms_[k] = c * s;
    return r;
  }
  BiPoly pow(int e) const {
    require(e >= 0, "negative polynomial power");
    BiPoly r = BiPoly::constant(Rat(1), vx_, vy_);
    BiPoly base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = (e >>= 1) > 0 ? base * base : base;
    }
    return r;
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }
  friend bool operator<(const BiPoly& a, const BiPoly& b) { return a.terms_ < b.terms_; }

  BiPoly partial_x() const {
    BiPoly r(vx_, vy_);
    for (const auto& [k, c] : terms_)
      if (k.first > 0) r.terms_[{k.first - 1, k.second}] = c * Rat(k.first);
    return r;
  }
  BiPoly partial_y() const {
    BiPoly r(vx_, vy_);
    for (const auto& [k, c] : terms_)
      if (k.second > 0) r.terms_[{k.first, k.second - 1}] = c * Rat(k.second);
    return r;
  }

  // Homogeneous part of top total degree.
  BiPoly leading_form() const {
    BiPoly r(vx_, vy_);
    int d = total_degree();
    for (const auto& [k, c] : terms_)
      if (k.first + k.second == d) r.terms_[k] = c;
    return r;
  }

  Rat eval(const Rat& x, const Rat& y) const {
    Rat acc(0);
    for (const auto& [k, c] : terms_) acc = acc + c * x.pow(k.first) * y.pow(k.second);
    return acc;
  }

  // Substitute values/polynomials for both variables (basis of composition).
  // T needs construction from int and Rat, +, *, and pow(int).
  template <class T>
  T subst(const T& x, const T& y) const {
    std::map<int, T> rows;  // j -> sum_i c_{ij} x^i
    for (const auto& [k, c] : terms_) {
      T add = T(c) * x.pow(k.first);
      auto it = rows.find(k.second);
      if (it == rows.end())
        rows.emplace(k.second, std::move(add));
      else
        it->second = it->second + add;
    }
    if (rows.empty()) return T(0);
    T acc(0);
    int prev = -1;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
      acc = prev < 0 ? it->second : acc * y.pow(prev - it->first) + it->second;
      prev = it->first;
    }
    if (prev > 0) acc = acc * y.pow(prev);
    return acc;
  }

  // View as a univariate polynomial in vy with UniPoly coefficients in vx.
  UniPoly<UniPoly<Rat>> as_poly_in_y() const {
    UniPoly<UniPoly<Rat>> r(vy_);
    for (const auto& [k, c] : terms_) {
      UniPoly<Rat> cur = r.coeff(k.second);
      if (cur.is_zero()) cur = UniPoly<Rat>(vx_);
      cur.set_coeff(k.first, c);
      r.set_coeff(k.second, cur.with_var(vx_));
    }
    return r;
  }
  UniPoly<UniPoly<Rat>> as_poly_in_x() const {
    UniPoly<UniPoly<Rat>> r(vx_);
    for (const auto& [k, c] : terms_) {
      UniPoly<Rat> cur = r.coeff(k.first);
      if (cur.is_zero()) cur = UniPoly<Rat>(vy_);
      cur.set_coeff(k.second, c);
      r.set_coeff(k.first, cur.with_var(vy_));
    }
    return r;
  }
  static BiPoly from_poly_in_y(const UniPoly<UniPoly<Rat>>& p, std::string vx, std::string vy) {
    BiPoly r(std::move(vx), std::move(vy));
    for (int j = 0; j <= p.degree(); ++j) {
      UniPoly<Rat> c = p.coeff(j);
      for (int i = 0; i <= c.degree(); ++i) r.add_term(i, j, c.coeff(i));
    }
    return r;
  }
  static BiPoly from_poly_in_x(const UniPoly<UniPoly<Rat>>& p, std::string vx, std::string vy) {
    BiPoly r(std::move(vx), std::move(vy));
    for (int i = 0; i <= p.degree(); ++i) {
      UniPoly<Rat> c = p.coeff(i);
      for (int j = 0; j <= c.degree(); ++j) r.add_term(i, j, c.coeff(j));
    }
    return r;
  }

  // Substitute a rational for vx, leaving a univariate polynomial in vy.
  UniPoly<Rat> eval_x(const Rat& x) const {
    UniPoly<Rat> r(vy_);
    for (const auto& [k, c] : terms_) r.set_coeff(k.second, r.coeff(k.second) + c * x.pow(k.first));
    return r;
  }
  UniPoly<Rat> eval_y(const Rat& y) const {
    UniPoly<Rat> r(vx_);
    for (const auto& [k, c] : terms_) r.set_coeff(k.first, r.coeff(k.first) + c * y.pow(k.second));
    return r;
  }

  std::string str() const;

  void check_vars(const BiPoly& other) const {
    if (is_constant() || other.is_constant()) return;
    if (vx_ != other.vx_ || vy_ != other.vy_)
      throw UsageError("variable-tag mismatch: (" + vx_ + "," + vy_ + ") vs (" + other.vx_ + "," +
                       other.vy_ + ")");
  }

private:
  std::string vx_, vy_;
  std::map<Key, Rat> terms_;
};

inline bool coeff_is_zero(const BiPoly& p) { return p.is_zero(); }
inline std::string coeff_str(const BiPoly& p) { return p.str(); }

// Content of f seen in K(vx)[vy]: gcd of the vy-coefficient polynomials in vx.
BiPoly content_y(const BiPoly& f);
// Primitive part w.r.t. vy, with a deterministic sign/scale normalization.
BiPoly primitive_part_y(const BiPoly& f);
// Normalization used across reports: primitive over Z with positive leading
// coefficient in the (total degree, then x-exponent) descending term order.
BiPoly normalized(const BiPoly& f);
BiPoly gcd_bi(const BiPoly& a, const BiPoly& b);
BiPoly squarefree_part_bi(const BiPoly& f);
bool try_exact_div_bi(const BiPoly& a, const BiPoly& b, BiPoly* quotient);
BiPoly exact_div(const BiPoly& a, const BiPoly& b);
bool divides_bi(const BiPoly& a, const BiPoly& b);  // a | b

// Resultant eliminating one variable; result is univariate in the other.
UniPoly<Rat> resultant_bi(const BiPoly& f, const BiPoly& g, const std::string& eliminate);

}  // namespace kellerscope
