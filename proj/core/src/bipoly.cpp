#include "kellerscope/bipoly.hpp"

#include <algorithm>
#include <vector>

namespace kellerscope {

namespace {

// Term order used for printing and normalization: total degree descending,
// then x-exponent descending.
std::vector<std::pair<BiPoly::Key, Rat>> ordered_terms(const BiPoly& f) {
  std::vector<std::pair<BiPoly::Key, Rat>> ts(f.terms().begin(), f.terms().end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  return ts;
}

std::string monomial_str(const BiPoly::Key& k, const Rat& coeff_abs, const std::string& vx,
                         const std::string& vy) {
  std::string out;
  bool coeff_shown = !(coeff_abs == Rat(1)) || (k.first == 0 && k.second == 0);
  if (coeff_shown) out += coeff_abs.str();
  auto add_var = [&](const std::string& v, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += v;
    if (e > 1) out += "^" + std::to_string(e);
  };
  add_var(vx, k.first);
  add_var(vy, k.second);
  return out;
}

}  // namespace

std::string BiPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : ordered_terms(*this)) {
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    out += monomial_str(k, c.abs(), vx_, vy_);
  }
  return out;
}

BiPoly content_y(const BiPoly& f) {
  UniPoly<UniPoly<Rat>> p = f.as_poly_in_y();
  UniPoly<Rat> g(f.xname());
  for (int j = 0; j <= p.degree(); ++j) {
    if (coeff_is_zero(p.coeff(j))) continue;
    g = gcd_poly(g, p.coeff(j).with_var(f.xname()));
    if (g.degree() == 0) break;
  }
  BiPoly r(f.xname(), f.yname());
  for (int i = 0; i <= g.degree(); ++i) r.add_term(i, 0, g.coeff(i));
  return r;
}

BiPoly primitive_part_y(const BiPoly& f) {
  if (f.is_zero()) return f;
  BiPoly c = content_y(f);
  return normalized(exact_div(f, c));
}

BiPoly normalized(const BiPoly& f) {
  if (f.is_zero()) return f;
  // Scale so coefficients are coprime integers and the leading term (in the
  // print order) is positive.
  Rat g(0);
  for (const auto& [k, c] : f.terms()) g = gcd(g, c);
  BiPoly r = f.scaled(g.inv());
  if (ordered_terms(r).front().second.sign() < 0) r = -r;
  return r;
}

bool try_exact_div_bi(const BiPoly& a, const BiPoly& b, BiPoly* quotient) {
  // Division in Q[x][y] viewing both in y; exactness requires coefficient
  // divisibility at every step.
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    if (quotient) *quotient = BiPoly(a.xname(), a.yname());
    return true;
  }
  a.check_vars(b);
  UniPoly<UniPoly<Rat>> r = a.as_poly_in_y(), d = b.as_poly_in_y();
  UniPoly<UniPoly<Rat>> q(a.yname());
  while (!r.is_zero() && r.degree() >= d.degree()) {
    auto [cq, cr] = divmod(r.lc().with_var(a.xname()), d.lc().with_var(a.xname()));
    if (!cr.is_zero()) return false;
    int k = r.degree() - d.degree();
    q.set_coeff(k, cq);
    UniPoly<UniPoly<Rat>> sub = d.scaled(cq).shifted_up(k);
    r = r - sub;
  }
  if (!r.is_zero()) return false;
  if (quotient) *quotient = BiPoly::from_poly_in_y(q, a.xname(), a.yname());
  return true;
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
  BiPoly q;
  ensure(try_exact_div_bi(a, b, &q), "inexact bivariate division");
  return q;
}

bool divides_bi(const BiPoly& a, const BiPoly& b) { return try_exact_div_bi(b, a, nullptr); }

BiPoly gcd_bi(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  a.check_vars(b);
  const std::string vx = a.xname(), vy = a.yname();
  // gcd in Q(x)[y] via the generic field algorithm, then restore content.
  auto lift = [&](const BiPoly& f) {
    UniPoly<UniPoly<Rat>> p = f.as_poly_in_y();
    UniPoly<RatFunc> r(vy);
    for (int j = 0; j <= p.degree(); ++j)
      if (!coeff_is_zero(p.coeff(j))) r.set_coeff(j, RatFunc(p.coeff(j).with_var(vx)));
    return r;
  };
  if (a.deg_y() == 0 && b.deg_y() == 0) {
    // Both are univariate in x.
    UniPoly<Rat> g = gcd_poly(a.eval_y(Rat(0)), b.eval_y(Rat(0)));
    BiPoly r(vx, vy);
    for (int i = 0; i <= g.degree(); ++i) r.add_term(i, 0, g.coeff(i));
    return normalized(r);
  }
  UniPoly<RatFunc> g = gcd_poly(lift(primitive_part_y(a)), lift(primitive_part_y(b)));
  // Clear denominators deterministically.
  UniPoly<Rat> den(vx, {Rat(1)});
  for (int j = 0; j <= g.degree(); ++j)
    if (!coeff_is_zero(g.coeff(j))) {
      UniPoly<Rat> dj = g.coeff(j).den();
      den = exact_div(den * dj, gcd_poly(den, dj));
    }
  BiPoly gp(vx, vy);
  for (int j = 0; j <= g.degree(); ++j)
    if (!coeff_is_zero(g.coeff(j))) {
      RatFunc c = g.coeff(j) * RatFunc(den);
      ensure(c.den().is_constant(), "denominator clearing failed");
      UniPoly<Rat> cn = c.num().scaled(c.den().coeff(0).inv());
      for (int i = 0; i <= cn.degree(); ++i) gp.add_term(i, j, cn.coeff(i));
    }
  BiPoly content_gcd = gcd_bi(content_y(a), content_y(b));
  return normalized(content_gcd * primitive_part_y(gp));
}

BiPoly squarefree_part_bi(const BiPoly& f) {
  if (f.is_zero() || f.is_constant()) return f;
  BiPoly fx = f.partial_x(), fy = f.partial_y();
  BiPoly g = fx.is_zero() ? gcd_bi(f, fy) : (fy.is_zero() ? gcd_bi(f, fx) : gcd_bi(f, gcd_bi(fx, fy)));
  if (g.is_constant()) return normalized(f);
  return normalized(exact_div(f, g));
}

UniPoly<Rat> resultant_bi(const BiPoly& f, const BiPoly& g, const std::string& eliminate) {
  require(!f.is_zero() && !g.is_zero(), "resultant_bi of zero polynomial");
  f.check_vars(g);
  std::string vx = f.xname(), vy = f.yname();
  if (f.is_constant() && !g.is_constant()) {
    vx = g.xname();
    vy = g.yname();
  }
  require(eliminate == vx || eliminate == vy, "unknown elimination variable");
  const bool elim_y = (eliminate == vy);
  const std::string keep = elim_y ? vx : vy;
  UniPoly<UniPoly<Rat>> pf = elim_y ? f.as_poly_in_y() : f.as_poly_in_x();
  UniPoly<UniPoly<Rat>> pg = elim_y ? g.as_poly_in_y() : g.as_poly_in_x();
  require(pf.degree() > 0 || pg.degree() > 0,
          "resultant_bi: both inputs have degree 0 in " + eliminate);
  UniPoly<Rat> res = resultant(pf, pg).with_var(keep);
  return res;
}

}  // namespace kellerscope
