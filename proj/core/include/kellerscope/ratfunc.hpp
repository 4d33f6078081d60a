#pragma once

#include <string>
#include <utility>

#include "kellerscope/unipoly.hpp"

namespace kellerscope {

// Univariate rational function over Q; the field Q(t) used as the base of
// pencil computations. Normal form: denominator monic, gcd(num, den) = 1.
class RatFunc {
public:
  RatFunc() : num_("t"), den_(UniPoly<Rat>::constant("t", Rat(1))) {}
  RatFunc(int c) : RatFunc(UniPoly<Rat>::constant("t", Rat(c))) {}
  explicit RatFunc(Rat c) : RatFunc(UniPoly<Rat>::constant("t", std::move(c))) {}
  explicit RatFunc(UniPoly<Rat> n) : num_(std::move(n)), den_(UniPoly<Rat>::constant(num_.var(), Rat(1))) {}
  RatFunc(UniPoly<Rat> n, UniPoly<Rat> d) : num_(std::move(n)), den_(std::move(d)) {
    require(!den_.is_zero(), "rational function with zero denominator");
    reduce();
  }

  static RatFunc variable(std::string var = "t") { return RatFunc(UniPoly<Rat>::variable(std::move(var))); }

  const UniPoly<Rat>& num() const { return num_; }
  const UniPoly<Rat>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rat to_rat() const {
    ensure(is_constant(), "non-constant rational function used as a rational");
    if (num_.is_zero()) return Rat(0);
    return num_.coeff(0) / den_.coeff(0);
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    require(!b.is_zero(), "division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc inv() const { return RatFunc(1) / *this; }
  RatFunc pow(int e) const {
    if (e < 0) return inv().pow(-e);
    RatFunc r(1), base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = (e >>= 1) > 0 ? base * base : base;
    }
    return r;
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  // Substitute a rational value for the variable; the value must not be a pole.
  Rat eval(const Rat& v) const {
    Rat d = den_.eval(v);
    require(!d.is_zero(), "evaluation at a pole of a rational function");
    return num_.eval(v) / d;
  }

  std::string str() const {
    if (den_ == UniPoly<Rat>::constant(den_.var(), Rat(1))) return num_.str();
    auto wrap = [](const std::string& s) {
      return s.find_first_of("+-* ") != std::string::npos && s.size() > 1 ? "(" + s + ")" : s;
    };
    return wrap(num_.str()) + "/" + wrap(den_.str());
  }

private:
  UniPoly<Rat> num_, den_;

  void reduce() {
    if (num_.is_zero()) {
      den_ = UniPoly<Rat>::constant(den_.var(), Rat(1));
      return;
    }
    UniPoly<Rat> g = gcd_poly(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    Rat lc = den_.lc();
    if (!(lc == Rat(1))) {
      num_ = num_.scaled(lc.inv());
      den_ = den_.scaled(lc.inv());
    }
  }
};

inline bool coeff_is_zero(const RatFunc& r) { return r.is_zero(); }
inline std::string coeff_str(const RatFunc& r) { return r.str(); }
inline RatFunc exact_div(const RatFunc& a, const RatFunc& b) { return a / b; }

}  // namespace kellerscope
