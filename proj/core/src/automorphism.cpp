#include "kellerscope/automorphism.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace kellerscope {

namespace {

BiPoly const_like(const Rat& c, const BiPoly& like) {
  return BiPoly::constant(c, like.xname(), like.yname());
}

UniPoly<Rat> const_like(const Rat& c, const UniPoly<Rat>& like) {
  return UniPoly<Rat>::constant(like.var(), c);
}

// h evaluated at a univariate or bivariate argument, Horner.
template <class P>
P eval_h(const UniPoly<Rat>& h, const P& arg) {
  P r = const_like(Rat(0), arg);
  for (std::size_t i = h.coeffs().size(); i-- > 0;) r = r * arg + const_like(h.coeffs()[i], arg);
  return r;
}

template <class P>
std::pair<P, P> apply_step(const AutoStep& s, const P& p, const P& q) {
  if (s.is_affine) {
    const AffineStep& a = s.aff;
    return {p.scaled(a.a) + q.scaled(a.b) + const_like(a.e, p),
            p.scaled(a.c) + q.scaled(a.d) + const_like(a.f, p)};
  }
  if (s.elem.on_first) return {p + eval_h(s.elem.h, q), q};
  return {p, q + eval_h(s.elem.h, p)};
}

}  // namespace

AutoStep AutoStep::affine(AffineStep s) {
  require(!s.det().is_zero(), "affine step is singular");
  AutoStep r;
  r.is_affine = true;
  r.aff = std::move(s);
  return r;
}

AutoStep AutoStep::elementary(ElementaryStep s) {
  AutoStep r;
  r.is_affine = false;
  r.elem = std::move(s);
  return r;
}

PolyMap AutomorphismWord::to_map() const {
  BiPoly p = BiPoly::var_x(), q = BiPoly::var_y();
  for (const AutoStep& s : steps) {
    auto [np, nq] = apply_step(s, p, q);
    p = std::move(np);
    q = std::move(nq);
  }
  return PolyMap(p, q);
}

ParamCurve AutomorphismWord::apply(const ParamCurve& c) const {
  UniPoly<Rat> p = c.phi, q = c.psi;
  for (const AutoStep& s : steps) {
    auto [np, nq] = apply_step(s, p, q);
    p = std::move(np);
    q = std::move(nq);
  }
  return ParamCurve{std::move(p), std::move(q)};
}

AutomorphismWord AutomorphismWord::inverse() const {
  AutomorphismWord w;
  for (std::size_t i = steps.size(); i-- > 0;) {
    const AutoStep& s = steps[i];
    if (s.is_affine) {
      const AffineStep& a = s.aff;
      Rat det = a.det();
      AffineStep r;
      r.a = a.d / det;
      r.b = -a.b / det;
      r.c = -a.c / det;
      r.d = a.a / det;
      r.e = -(r.a * a.e + r.b * a.f);
      r.f = -(r.c * a.e + r.d * a.f);
      w.steps.push_back(AutoStep::affine(r));
    } else {
      w.steps.push_back(AutoStep::elementary(ElementaryStep{s.elem.on_first, -s.elem.h}));
    }
  }
  return w;
}

Rat AutomorphismWord::jacobian_det() const {
  Rat d(1);
  for (const AutoStep& s : steps)
    if (s.is_affine) d = d * s.aff.det();
  return d;
}

int AutomorphismWord::expected_degree() const {
  int d = 1;
  for (const AutoStep& s : steps)
    if (!s.is_affine) d *= std::max(1, s.elem.h.degree());
  return d;
}

namespace {

bool nonconst(const UniPoly<Rat>& p) { return p.degree() >= 1; }

// The affine step exchanging the two coordinates.
AutoStep swap_step() {
  AffineStep a;
  a.a = Rat(0);
  a.b = Rat(1);
  a.c = Rat(1);
  a.d = Rat(0);
  return AutoStep::affine(a);
}

void push_and_apply(AutomorphismWord& w, AutoStep s, UniPoly<Rat>& p, UniPoly<Rat>& q) {
  auto [np, nq] = apply_step(s, p, q);
  p = std::move(np);
  q = std::move(nq);
  w.steps.push_back(std::move(s));
}

}  // namespace

RectifyOutcome am_rectify(const ParamCurve& curve) {
  RectifyOutcome out;

  // Immersion: a common root of the coordinate derivatives is a singular
  // parameter value, so the map is not an embedding.
  UniPoly<Rat> dphi = curve.phi.derivative(), dpsi = curve.psi.derivative();
  if (dphi.is_zero() && dpsi.is_zero()) {
    out.status = RectifyStatus::NOT_EMBEDDING;
    out.reason = "derivative: both coordinate derivatives vanish identically";
    return out;
  }
  UniPoly<Rat> g = dphi.is_zero() ? dpsi : (dpsi.is_zero() ? dphi : gcd_poly(dphi, dpsi));
  if (g.degree() >= 1) {
    out.status = RectifyStatus::NOT_EMBEDDING;
    out.reason = "derivative: common vanishing at roots of " + g.str();
    return out;
  }

  // Self-intersection: a nontrivial common factor of phi(xi) - phi(eta) and
  // psi(xi) - psi(eta) beyond (xi - eta) witnesses non-injectivity along a
  // whole curve of parameter pairs.
  {
    auto diff = [](const UniPoly<Rat>& p) {
      BiPoly d("xi", "eta");
      for (int j = 0; j <= p.degree(); ++j) {
        const Rat& c = p.coeff(j);
        if (c.is_zero()) continue;
        d.add_term(j, 0, c);
        d.add_term(0, j, -c);
      }
      return d;
    };
    BiPoly dp = diff(curve.phi), dq = diff(curve.psi);
    BiPoly cg = dp.is_zero() ? dq : (dq.is_zero() ? dp : gcd_bi(dp, dq));
    BiPoly line = BiPoly::var_x("xi", "eta") - BiPoly::var_y("xi", "eta");
    BiPoly extra = exact_div(cg, line);
    if (!extra.is_constant()) {
      out.status = RectifyStatus::NOT_EMBEDDING;
      out.reason = "self-intersection: parameter pairs on " + extra.str();
      return out;
    }
  }

  UniPoly<Rat> p = curve.phi, q = curve.psi;
  AutomorphismWord w;
  while (nonconst(p) && nonconst(q)) {
    if (p.degree() < q.degree()) {
      push_and_apply(w, swap_step(), p, q);
      continue;
    }
    int dp = p.degree(), dq = q.degree();
    if (dp % dq != 0) {
      out.status = RectifyStatus::NOT_EMBEDDING;
      std::ostringstream os;
      os << "divisibility: degree " << dq << " does not divide degree " << dp;
      out.reason = os.str();
      return out;
    }
    int k = dp / dq;
    Rat c = p.lc() / q.lc().pow(k);
    if (k == 1) {
      AffineStep a;
      a.b = -c;  // u - c v
      push_and_apply(w, AutoStep::affine(a), p, q);
    } else {
      UniPoly<Rat> h = UniPoly<Rat>::monomial("t", -c, k);
      push_and_apply(w, AutoStep::elementary(ElementaryStep{true, h}), p, q);
    }
    ensure(p.degree() < dp, "rectification failed to reduce the degree");
  }

  // One coordinate is now constant; finish with a single affine step mapping
  // the curve exactly onto (xi, 0).
  if (nonconst(q)) push_and_apply(w, swap_step(), p, q);
  ensure(p.degree() == 1, "rectified curve is not linear in the parameter");
  {
    Rat a = p.lc(), b = p.coeff(0), cc = q.coeff(0);
    AffineStep fin;
    fin.a = a.inv();
    fin.e = -b / a;
    fin.f = -cc;
    if (!(fin.a == Rat(1)) || !fin.e.is_zero() || !fin.f.is_zero())
      push_and_apply(w, AutoStep::affine(fin), p, q);
  }
  ensure(p == UniPoly<Rat>::variable("xi") && q.is_zero(), "rectified image is not (xi, 0)");
  out.status = RectifyStatus::LINE;
  out.word = std::move(w);
  return out;
}

AutomorphismWord graph_rectify(const ParamCurve& curve) {
  require(curve.phi.degree() == 1, "graph rectification needs a degree-1 first coordinate");
  Rat a = curve.phi.lc(), b = curve.phi.coeff(0);
  UniPoly<Rat> inv("t");
  inv.set_coeff(1, a.inv());
  inv.set_coeff(0, -b / a);
  UniPoly<Rat> h = eval_h(curve.psi, inv);  // psi o phi^{-1}
  AutomorphismWord w;
  w.steps.push_back(AutoStep::elementary(ElementaryStep{false, -h}));
  return w;
}

namespace {

// Least degree-reducing subtraction data for jvdk peeling, or a reason.
struct PeelFailure {
  bool failed = false;
  std::string reason;
};

PeelFailure proportional_const(const BiPoly& lp, const BiPoly& lq_pow, Rat* c) {
  // lp = c * lq_pow with rational c, checked by cross multiplication.
  auto lt = lq_pow.terms().begin();
  ensure(lt != lq_pow.terms().end(), "zero leading form");
  auto it = lp.terms().find(lt->first);
  if (it == lp.terms().end())
    return {true, "leading_forms: leading form is not proportional to the required power"};
  Rat cand = it->second / lt->second;
  BiPoly diff = lp - lq_pow.scaled(cand);
  if (!diff.is_zero())
    return {true, "leading_forms: leading form is not proportional to the required power"};
  *c = cand;
  return {};
}

}  // namespace

JvdkOutcome jvdk_invert(const PolyMap& F) {
  JvdkOutcome out;
  BiPoly p = F.P(), q = F.Q();
  AutomorphismWord w;
  int guard = 0;
  while (true) {
    ensure(++guard < 512, "peeling did not terminate");
    int dp = p.total_degree(), dq = q.total_degree();
    if (dp <= 0 || dq <= 0) {
      out.reason = "constant_component: a coordinate became constant";
      return out;
    }
    if (dp == 1 && dq == 1) break;
    bool first_larger = dp >= dq;
    const BiPoly& hi = first_larger ? p : q;
    const BiPoly& lo = first_larger ? q : p;
    int dhi = first_larger ? dp : dq, dlo = first_larger ? dq : dp;
    if (dhi % dlo != 0) {
      std::ostringstream os;
      os << "divisibility: degree " << dlo << " does not divide degree " << dhi;
      out.reason = os.str();
      return out;
    }
    int k = dhi / dlo;
    Rat c(0);
    PeelFailure pf = proportional_const(hi.leading_form(), lo.leading_form().pow(k), &c);
    if (pf.failed) {
      out.reason = pf.reason;
      return out;
    }
    AutoStep step;
    if (k == 1) {
      AffineStep a;
      if (first_larger)
        a.b = -c;
      else
        a.c = -c;
      step = AutoStep::affine(a);
    } else {
      UniPoly<Rat> h = UniPoly<Rat>::monomial("t", -c, k);
      step = AutoStep::elementary(ElementaryStep{first_larger, h});
    }
    auto [np, nq] = apply_step(step, p, q);
    if (np.total_degree() + nq.total_degree() >= dp + dq) {
      out.reason = "no_progress: subtraction failed to reduce the degree";
      return out;
    }
    p = std::move(np);
    q = std::move(nq);
    w.steps.push_back(std::move(step));
  }

  // Affine tail: the remaining map is linear; append its inverse.
  AffineStep lin;
  lin.a = p.coeff(1, 0);
  lin.b = p.coeff(0, 1);
  lin.e = p.coeff(0, 0);
  lin.c = q.coeff(1, 0);
  lin.d = q.coeff(0, 1);
  lin.f = q.coeff(0, 0);
  if (lin.det().is_zero()) {
    out.reason = "affine_singular: linear part is not invertible";
    return out;
  }
  AutomorphismWord tail;
  tail.steps.push_back(AutoStep::affine(lin));
  w.steps.push_back(tail.inverse().steps.front());

  PolyMap inv = w.to_map();
  PolyMap id = PolyMap::identity();
  if (!(compose(inv, F) == id) || !(compose(F, inv) == id)) {
    out.reason = "no_progress: peeled word does not invert the map";
    return out;
  }
  out.ok = true;
  out.inverse = std::move(w);
  return out;
}

AutomorphismWord random_tame(Rng& rng) {
  auto small_nonzero = [&rng]() {
    Rat r(0);
    while (r.is_zero()) r = Rat(static_cast<int>(rng.next_range(-3, 3)));
    return r;
  };
  auto small_coeff = [&rng]() { return Rat(static_cast<int>(rng.next_range(-3, 3))); };
  auto draw_affine = [&]() {
    AffineStep a;
    do {
      a.a = small_nonzero();
      a.b = small_nonzero();
      a.c = small_nonzero();
      a.d = small_nonzero();
    } while (a.det().is_zero());
    a.e = small_coeff();
    a.f = small_coeff();
    return AutoStep::affine(a);
  };

  int n_elem = 1 + static_cast<int>(rng.next_below(3));
  std::vector<int> degs;
  int product = 1;
  for (int i = 0; i < n_elem; ++i) {
    int d = 2 + static_cast<int>(rng.next_below(3));
    while (d > 2 && product * d > 12) --d;
    if (product * d > 12) break;  // degree budget spent; shorten the word
    degs.push_back(d);
    product *= d;
  }
  if (degs.empty()) degs.push_back(2);

  AutomorphismWord w;
  bool side = rng.next_below(2) == 0;
  for (int d : degs) {
    w.steps.push_back(draw_affine());
    UniPoly<Rat> h("t");
    h.set_coeff(d, small_nonzero());
    for (int j = 0; j < d; ++j) h.set_coeff(j, small_coeff());
    w.steps.push_back(AutoStep::elementary(ElementaryStep{side, h}));
    side = !side;
  }
  if (w.steps.size() < 6 && rng.next_below(2) == 0) w.steps.push_back(draw_affine());

  int got = w.to_map().degree();
  int want = w.expected_degree();
  ensure(got == want, "tame word degree bookkeeping mismatch");
  return w;
}

}  // namespace kellerscope
