#include "kellerscope/factor_param.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace kellerscope {

namespace {

using Ser = UniPoly<Rat>;     // truncated power series in s = t - t0
using SP = std::vector<Ser>;  // z-coefficients ascending, trimmed

Ser ser_trunc(const Ser& a, int m) {
  if (a.degree() < m) return a;
  std::vector<Rat> c(a.coeffs().begin(), a.coeffs().begin() + m);
  return Ser(a.var(), std::move(c));
}

void sp_trim(SP& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int sp_deg(const SP& a) { return static_cast<int>(a.size()) - 1; }

SP sp_trunc(SP a, int m) {
  for (auto& c : a) c = ser_trunc(c, m);
  sp_trim(a);
  return a;
}

SP sp_add(SP a, const SP& b) {
  if (b.size() > a.size()) a.resize(b.size(), Ser("s"));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i];
  sp_trim(a);
  return a;
}

SP sp_sub(SP a, const SP& b) {
  if (b.size() > a.size()) a.resize(b.size(), Ser("s"));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
  sp_trim(a);
  return a;
}

SP sp_mul(const SP& a, const SP& b, int m) {
  if (a.empty() || b.empty()) return {};
  SP r(a.size() + b.size() - 1, Ser("s"));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = ser_trunc(r[i + j] + a[i] * b[j], m);
  }
  sp_trim(r);
  return r;
}

// Division by a divisor whose leading z-coefficient is the constant series 1.
void sp_divmod_monic(const SP& a, const SP& b, int m, SP* q, SP* r) {
  ensure(!b.empty() && b.back() == Ser::constant("s", Rat(1)),
         "series Hensel division expects a monic divisor");
  SP quo, rem = sp_trunc(a, m);
  if (rem.size() >= b.size()) quo.assign(rem.size() - b.size() + 1, Ser("s"));
  while (rem.size() >= b.size() && !rem.empty()) {
    Ser f = rem.back();
    std::size_t d = rem.size() - b.size();
    quo[d] = f;
    for (std::size_t i = 0; i < b.size(); ++i) rem[d + i] = ser_trunc(rem[d + i] - f * b[i], m);
    sp_trim(rem);
  }
  sp_trim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

SP sp_of_univariate(const UniPoly<Rat>& f) {
  SP r(f.coeffs().size(), Ser("s"));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = Ser::constant("s", f.coeffs()[i]);
  sp_trim(r);
  return r;
}

UniPoly<Rat> sp_at_zero(const SP& a, const std::string& var) {
  std::vector<Rat> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i].coeff(0);
  return UniPoly<Rat>(var, std::move(c));
}

// Bezout cofactors over Q for coprime (g, h): s*g + t*h = 1.
void q_bezout(const UniPoly<Rat>& g, const UniPoly<Rat>& h, UniPoly<Rat>* s, UniPoly<Rat>* t) {
  const std::string& v = g.var();
  UniPoly<Rat> r0 = g, r1 = h;
  UniPoly<Rat> s0 = UniPoly<Rat>::constant(v, Rat(1)), s1(v);
  UniPoly<Rat> t0(v), t1 = UniPoly<Rat>::constant(v, Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = r1;
    r1 = r;
    UniPoly<Rat> s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    UniPoly<Rat> t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  ensure(r0.degree() == 0, "Hensel Bezout basis not coprime");
  Rat inv = r0.coeff(0).inv();
  *s = s0.scaled(inv);
  *t = t0.scaled(inv);
}

// One quadratic Hensel step: from (f = g*h, s*g + t*h = 1) mod s^k to mod
// s^min(2k, cap); h monic throughout.
void sp_hensel_step(const SP& f, SP& g, SP& h, SP& s, SP& t, int m) {
  SP e = sp_trunc(sp_sub(sp_trunc(f, m), sp_mul(g, h, m)), m);
  SP q, r;
  sp_divmod_monic(sp_mul(s, e, m), h, m, &q, &r);
  SP g1 = sp_trunc(sp_add(sp_add(g, sp_mul(t, e, m)), sp_mul(q, g, m)), m);
  SP h1 = sp_add(h, r);
  SP one{Ser::constant("s", Rat(1))};
  SP b = sp_trunc(sp_sub(sp_add(sp_mul(s, g1, m), sp_mul(t, h1, m)), one), m);
  SP c, d;
  sp_divmod_monic(sp_mul(s, b, m), h1, m, &c, &d);
  SP s1 = sp_trunc(sp_sub(s, d), m);
  SP t1 = sp_trunc(sp_sub(sp_sub(t, sp_mul(t, b, m)), sp_mul(c, g1, m)), m);
  g = std::move(g1);
  h = std::move(h1);
  s = std::move(s1);
  t = std::move(t1);
}

// Lift f = prod(parts) (all monic, pairwise coprime mod s) from mod s to mod
// s^target, replacing parts in place.
void sp_lift_tree(const SP& f, std::vector<SP>& parts, std::size_t lo, std::size_t hi, int target) {
  if (hi - lo == 1) {
    parts[lo] = sp_trunc(f, target);
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  SP g{Ser::constant("s", Rat(1))}, h{Ser::constant("s", Rat(1))};
  for (std::size_t i = lo; i < mid; ++i) g = sp_mul(g, sp_trunc(parts[i], 1), 1);
  for (std::size_t i = mid; i < hi; ++i) h = sp_mul(h, sp_trunc(parts[i], 1), 1);
  UniPoly<Rat> s0, t0;
  q_bezout(sp_at_zero(g, "z"), sp_at_zero(h, "z"), &s0, &t0);
  SP s = sp_of_univariate(s0), t = sp_of_univariate(t0);
  int k = 1;
  while (k < target) {
    int m = std::min(2 * k, target);
    sp_hensel_step(f, g, h, s, t, m);
    k = m;
  }
  sp_lift_tree(g, parts, lo, mid, target);
  sp_lift_tree(h, parts, mid, hi, target);
}

// Irreducible monic factors over Q(t) of a monic squarefree polynomial.
std::vector<UniPoly<RatFunc>> factor_sqfree_qt(const UniPoly<RatFunc>& p, const Caps& caps) {
  const int d = p.degree();
  if (d == 1) return {p};
  const std::string zv = p.var();

  // Clear denominators to Q[t][z] and strip the polynomial content.
  UniPoly<Rat> den_lcm = UniPoly<Rat>::constant("t", Rat(1));
  for (const RatFunc& c : p.coeffs()) {
    UniPoly<Rat> g = gcd_poly(den_lcm, c.den());
    den_lcm = exact_div(den_lcm * c.den(), g);
  }
  std::vector<UniPoly<Rat>> gpoly(static_cast<std::size_t>(d) + 1, UniPoly<Rat>("t"));
  UniPoly<Rat> content("t");
  for (int k = 0; k <= d; ++k) {
    RatFunc ck = p.coeff(k) * RatFunc(den_lcm);
    ensure(ck.den().degree() == 0, "denominator clearing left a denominator");
    gpoly[static_cast<std::size_t>(k)] = ck.num().scaled(ck.den().coeff(0).inv());
    content = gcd_poly(content, gpoly[static_cast<std::size_t>(k)]);
  }
  if (content.degree() > 0)
    for (auto& g : gpoly) g = exact_div(g, content);

  // Monicize: A(t, z) = l^(d-1) G(t, z/l) with l the leading z-coefficient.
  const UniPoly<Rat> l = gpoly[static_cast<std::size_t>(d)];
  std::vector<UniPoly<Rat>> A(static_cast<std::size_t>(d) + 1, UniPoly<Rat>("t"));
  A[static_cast<std::size_t>(d)] = UniPoly<Rat>::constant("t", Rat(1));
  for (int k = 0; k < d; ++k)
    A[static_cast<std::size_t>(k)] = gpoly[static_cast<std::size_t>(k)] * l.pow(d - 1 - k);

  // Squarefree specialization point.
  Rat t0;
  UniPoly<Rat> u(zv);
  bool found = false;
  for (int cand = 0; cand < 100 && !found; ++cand) {
    int v = (cand % 2 == 0) ? cand / 2 : -(cand / 2 + 1);
    std::vector<Rat> uc(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) uc[static_cast<std::size_t>(k)] = A[static_cast<std::size_t>(k)].eval(Rat(v));
    UniPoly<Rat> ucand(zv, std::move(uc));
    if (gcd_poly(ucand, ucand.derivative()).degree() != 0) continue;
    t0 = Rat(v);
    u = std::move(ucand);
    found = true;
  }
  ensure(found, "no squarefree specialization for the parametric factorization");

  FactorizationQ uf = factor_rational(u, caps);
  if (uf.factors.size() == 1) return {p};

  // Coefficient-degree bound for monic factors, from the Newton polygon of A
  // at t = infinity: deg_t of any factor coefficient <= max_k d*deg_t(A_k)/(d-k).
  long bt = 0;
  for (int k = 0; k < d; ++k) {
    const auto& ak = A[static_cast<std::size_t>(k)];
    if (ak.is_zero()) continue;
    long num = static_cast<long>(d) * ak.degree();
    long den = d - k;
    bt = std::max(bt, (num + den - 1) / den);
  }
  const int target = static_cast<int>(bt) + 2;

  // Shift to s = t - t0 and lift the specialized factors.
  UniPoly<Rat> shift("s", {t0, Rat(1)});
  SP big(static_cast<std::size_t>(d) + 1, Ser("s"));
  for (int k = 0; k <= d; ++k) big[static_cast<std::size_t>(k)] = A[static_cast<std::size_t>(k)].compose(shift);
  std::vector<SP> parts;
  parts.reserve(uf.factors.size());
  for (const auto& [fac, mult] : uf.factors) {
    ensure(mult == 1, "squarefree specialization factored with multiplicity");
    parts.push_back(sp_of_univariate(fac));
  }
  sp_lift_tree(big, parts, 0, parts.size(), target);

  // Recombination: true monic factors have coefficient degree <= bt and are
  // therefore equal to their lifted subset products mod s^target.
  UniPoly<Rat> back("t", {Rat(0) - t0, Rat(1)});
  UniPoly<RatFunc> remaining(zv);
  for (int k = 0; k <= d; ++k)
    remaining.set_coeff(k, RatFunc(A[static_cast<std::size_t>(k)]));
  std::vector<UniPoly<RatFunc>> hats;
  std::vector<SP> pool = std::move(parts);
  std::size_t subset_size = 1;
  while (pool.size() >= 2 * subset_size) {
    caps.check_deadline("parametric factorization");
    std::vector<std::size_t> idx(subset_size);
    for (std::size_t i = 0; i < subset_size; ++i) idx[i] = i;
    bool found_factor = false;
    while (true) {
      SP cand{Ser::constant("s", Rat(1))};
      for (auto i : idx) cand = sp_mul(cand, pool[i], target);
      bool small = true;
      for (const auto& c : cand)
        if (c.degree() > bt) small = false;
      if (small) {
        UniPoly<RatFunc> trial(zv);
        for (int k = 0; k <= sp_deg(cand); ++k)
          trial.set_coeff(k, RatFunc(cand[static_cast<std::size_t>(k)].compose(back)));
        auto [q, r] = divmod(remaining, trial);
        if (r.is_zero()) {
          hats.push_back(trial);
          remaining = q;
          std::vector<SP> next_pool;
          for (std::size_t i = 0, k = 0; i < pool.size(); ++i) {
            if (k < idx.size() && idx[k] == i) {
              ++k;
              continue;
            }
            next_pool.push_back(std::move(pool[i]));
          }
          pool = std::move(next_pool);
          found_factor = true;
          break;
        }
      }
      int pos = static_cast<int>(subset_size) - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == pool.size() - subset_size + static_cast<std::size_t>(pos)) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < subset_size; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found_factor) ++subset_size;
  }
  if (remaining.degree() >= 1) hats.push_back(remaining);

  // Undo the monicization: factors of p are H(t, l*z) / l^deg(H).
  RatFunc lr(l);
  std::vector<UniPoly<RatFunc>> out;
  for (const auto& hat : hats) {
    int m = hat.degree();
    UniPoly<RatFunc> h(zv);
    for (int j = 0; j <= m; ++j) h.set_coeff(j, hat.coeff(j) * lr.pow(j - m));
    out.push_back(std::move(h));
  }
  UniPoly<RatFunc> prod = UniPoly<RatFunc>::constant(zv, RatFunc(1));
  for (const auto& h : out) prod = prod * h;
  ensure(prod == p, "parametric factorization failed the product check");
  return out;
}

}  // namespace

FactorizationT factor_ratfunc_poly(const UniPoly<RatFunc>& f, const Caps& caps) {
  require(!f.is_zero(), "factoring the zero polynomial");
  if (f.degree() > caps.factor_degree)
    throw CapacityError("degree " + std::to_string(f.degree()) +
                        " exceeds factorization cap " + std::to_string(caps.factor_degree));
  FactorizationT out;
  out.unit = f.lc();
  if (f.degree() <= 0) return out;
  UniPoly<RatFunc> fm = f.scaled(RatFunc(1) / out.unit);
  for (const auto& [part, mult] : yun_field(fm))
    for (const auto& irr : factor_sqfree_qt(part, caps))
      out.factors.emplace_back(irr, mult);
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.str() < b.first.str();
  });
  UniPoly<RatFunc> check = UniPoly<RatFunc>::constant(f.var(), out.unit);
  for (const auto& [fac, mult] : out.factors) check = check * fac.pow(mult);
  ensure(check == f, "parametric factorization product check failed");
  return out;
}

}  // namespace kellerscope
