#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "kellerscope/factor.hpp"
#include "kellerscope/ratfunc.hpp"
#include "kellerscope/tower.hpp"
#include "kellerscope/unipoly.hpp"

namespace kellerscope {

// Factorization over Q(t): unit * prod factor^mult == input with factors
// monic and irreducible over Q(t), in deterministic (degree, string) order.
// Internally solves the polynomial problem in Q[t][z] by a (t - t0)-adic
// Hensel lift with a Newton-polygon coefficient-degree bound.
struct FactorizationT {
  RatFunc unit;
  std::vector<std::pair<UniPoly<RatFunc>, int>> factors;
};

FactorizationT factor_ratfunc_poly(const UniPoly<RatFunc>& f, const Caps& caps);

namespace detail {
inline FactorizationQ factor_base(const UniPoly<Rat>& f, const Caps& caps) {
  return factor_rational(f, caps);
}
inline FactorizationT factor_base(const UniPoly<RatFunc>& f, const Caps& caps) {
  return factor_ratfunc_poly(f, caps);
}
}  // namespace detail

template <class B>
struct TowerFactorization {
  TElem<B> unit;
  std::vector<std::pair<UniPoly<TElem<B>>, int>> factors;
};

template <class B>
UniPoly<B> to_base_poly(const UniPoly<TElem<B>>& f) {
  std::vector<B> c;
  c.reserve(f.coeffs().size());
  for (const TElem<B>& e : f.coeffs()) c.push_back(e.to_base());
  return UniPoly<B>(f.var(), std::move(c));
}

template <class B>
UniPoly<TElem<B>> from_base_poly(const UniPoly<B>& f) {
  std::vector<TElem<B>> c;
  c.reserve(f.coeffs().size());
  for (const B& v : f.coeffs()) c.push_back(TElem<B>(v));
  return UniPoly<TElem<B>>(f.var(), std::move(c));
}

template <class B>
TowerFactorization<B> factor_over_tower(const UniPoly<TElem<B>>& f, const Tower<B>& lvl,
                                        const Caps& caps);

namespace detail {

// Trager: factor a monic squarefree polynomial over the field of `lvl`
// (non-null) by recursing on a squarefree norm one level down.
template <class B>
std::vector<UniPoly<TElem<B>>> trager_squarefree(const UniPoly<TElem<B>>& part,
                                                 const Tower<B>& lvl, const Caps& caps) {
  using E = TElem<B>;
  using P = UniPoly<E>;
  if (part.degree() == 1) return {part};
  const E gen = E::generator(lvl);
  const std::string zv = part.var();
  for (int trial = 0;; ++trial) {
    ensure(trial < 100, "no squarefree norm found in the tower");
    caps.check_deadline("tower factorization");
    const int s = (trial % 2 == 0) ? trial / 2 : -(trial / 2 + 1);
    // shifted(z) = part(z - s*gen)
    P inner = P::variable(zv) - P::constant(zv, gen * E(s));
    P shifted = part.compose(inner);
    // Rewrite as a polynomial in the top generator w with z-poly coefficients
    // and take the norm Res_w(minpoly, shifted).
    UniPoly<P> fw("@w");
    for (int j = 0; j <= shifted.degree(); ++j) {
      std::vector<E> cw = shifted.coeff(j).coeffs_at(lvl);
      for (std::size_t i = 0; i < cw.size(); ++i) {
        P cur = fw.coeff(static_cast<int>(i));
        fw.set_coeff(static_cast<int>(i), cur + P::monomial(zv, cw[i], j));
      }
    }
    UniPoly<P> mw("@w");
    for (int i = 0; i <= lvl->degree(); ++i)
      mw.set_coeff(i, P::constant(zv, lvl->minpoly[static_cast<std::size_t>(i)]));
    P norm = resultant(mw, fw);
    if (gcd_poly(norm, norm.derivative()).degree() != 0) continue;
    TowerFactorization<B> sub = factor_over_tower<B>(norm, lvl->below, caps);
    std::vector<P> out;
    P back = P::variable(zv) + P::constant(zv, gen * E(s));
    for (const auto& [ni, mult] : sub.factors) {
      ensure(mult == 1, "squarefree norm factored with multiplicity");
      P h = gcd_poly(part, ni.compose(back));
      ensure(h.degree() >= 1, "norm factor with trivial gcd");
      out.push_back(h);
    }
    return out;
  }
}

}  // namespace detail

// Factorization over the field of an extension tower (nullptr = the base
// field B). Factors are monic and irreducible in deterministic order;
// unit * prod factor^mult == f is verified before returning. Minimal
// polynomials along the tower must be irreducible (the extend_field
// contract); a violation surfaces as an internal error.
template <class B>
TowerFactorization<B> factor_over_tower(const UniPoly<TElem<B>>& f, const Tower<B>& lvl,
                                        const Caps& caps) {
  using E = TElem<B>;
  using P = UniPoly<E>;
  require(!f.is_zero(), "factorization of the zero polynomial");
  for (const E& c : f.coeffs())
    ensure(level_in_ancestry(c.level(), lvl), "coefficient outside the tower being factored");
  TowerFactorization<B> out;
  out.unit = f.lc();
  if (f.degree() <= 0) return out;
  if (f.degree() > caps.factor_degree)
    throw CapacityError("factorization degree " + std::to_string(f.degree()) +
                        " exceeds cap factor_degree = " + std::to_string(caps.factor_degree));
  if (!lvl) {
    auto bf = detail::factor_base(to_base_poly<B>(f), caps);
    out.unit = E(bf.unit);
    for (const auto& [fac, mult] : bf.factors)
      out.factors.emplace_back(from_base_poly<B>(fac), mult);
    return out;
  }
  P fm = f.scaled(out.unit.inv());
  for (const auto& [part, mult] : yun_field(fm))
    for (const P& irr : detail::trager_squarefree<B>(part, lvl, caps))
      out.factors.emplace_back(irr, mult);
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.str() < b.first.str();
  });
  P prod = P::constant(f.var(), out.unit);
  for (const auto& [fac, mult] : out.factors) prod = prod * fac.pow(mult);
  ensure(prod == f, "tower factorization failed the product check");
  return out;
}

template <class B>
bool is_irreducible_over_tower(const UniPoly<TElem<B>>& f, const Tower<B>& lvl, const Caps& caps) {
  if (f.degree() <= 0) return false;
  auto fz = factor_over_tower<B>(f, lvl, caps);
  return fz.factors.size() == 1 && fz.factors[0].second == 1;
}

}  // namespace kellerscope
