#include "kellerscope/param_curve.hpp"

#include <algorithm>
#include <vector>

#include "kellerscope/matrix.hpp"

namespace kellerscope {

ParamCurve make_param_curve(UniPoly<Rat> phi, UniPoly<Rat> psi) {
  require(phi.var() == "xi" && psi.var() == "xi", "parametrization parameter must be xi");
  require(!phi.is_constant() || !psi.is_constant(), "parametrization of a point");
  return ParamCurve{std::move(phi), std::move(psi)};
}

int param_deg(const UniPoly<Rat>& p) { return std::max(p.degree(), 0); }

BiPoly canonical_curve(const BiPoly& f) {
  require(!f.is_zero(), "canonical form of the zero curve");
  Rat g(0);
  for (const auto& [k, c] : f.terms()) g = gcd(g, c);
  BiPoly r = f.scaled(g.inv());
  std::pair<int, int> lead{-1, -1};
  Rat lead_c(0);
  for (const auto& [k, c] : r.terms()) {
    std::pair<int, int> key{k.second, k.first};  // v-power major
    if (key > lead) {
      lead = key;
      lead_c = c;
    }
  }
  if (lead_c.sign() < 0) r = -r;
  return r;
}

BiPoly implicitize(const ParamCurve& c) {
  BiPoly u = BiPoly::var_x("u", "v"), v = BiPoly::var_y("u", "v");
  if (c.phi.is_constant())
    return canonical_curve(u - BiPoly::constant(c.phi.coeff(0), "u", "v"));
  if (c.psi.is_constant())
    return canonical_curve(v - BiPoly::constant(c.psi.coeff(0), "u", "v"));

  // Sylvester matrix in xi of (u - phi, v - psi) with BiPoly(u, v) entries,
  // coefficients descending.
  const int m = c.phi.degree(), n = c.psi.degree();
  auto coef = [&](const UniPoly<Rat>& p, const BiPoly& var, int j) {
    BiPoly e = BiPoly::constant(-p.coeff(j), "u", "v");
    if (j == 0) e = e + var;
    return e;
  };
  const int sz = m + n;
  std::vector<std::vector<BiPoly>> mat(
      static_cast<std::size_t>(sz),
      std::vector<BiPoly>(static_cast<std::size_t>(sz), BiPoly("u", "v")));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = coef(c.phi, u, m - j);
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) mat[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] = coef(c.psi, v, n - j);
  BiPoly res = bareiss_det(
      std::move(mat), [](BiPoly a, const BiPoly& b) { return exact_div(a, b); },
      [](const BiPoly& a) { return a.is_zero(); });
  ensure(!res.is_zero(), "implicitization vanished identically");
  BiPoly sq = squarefree_part_bi(res);
  ensure(!sq.is_constant(), "implicitization of a nonconstant parametrization is constant");
  return canonical_curve(sq);
}

namespace {

// Rational lambda > 0 with lambda^d = x (x > 0), when one exists.
bool rational_root(const Rat& x, int d, Rat* out) {
  mpz_class num = x.num(), den = x.den(), rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(d)) == 0) return false;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(d)) == 0) return false;
  *out = Rat(mpz_class(rn)) / Rat(mpz_class(rd));
  return true;
}

UniPoly<Rat> affine_sub(const UniPoly<Rat>& p, const Rat& a, const Rat& b) {
  // p(a*xi + b)
  UniPoly<Rat> inner("xi");
  inner.set_coeff(1, a);
  inner.set_coeff(0, b);
  return p.compose(inner);
}

}  // namespace

ParamCurve normalize_param(const ParamCurve& c) {
  const bool phi_const = c.phi.is_constant(), psi_const = c.psi.is_constant();
  if (!phi_const && c.phi.degree() == 1) {
    // xi -> (xi - b) / a makes phi exactly xi.
    Rat a = c.phi.lc(), b = c.phi.coeff(0);
    return ParamCurve{affine_sub(c.phi, a.inv(), -b / a), affine_sub(c.psi, a.inv(), -b / a)};
  }
  if (phi_const && c.psi.degree() == 1) {
    Rat a = c.psi.lc(), b = c.psi.coeff(0);
    return ParamCurve{c.phi, affine_sub(c.psi, a.inv(), -b / a)};
  }
  const UniPoly<Rat>* g = phi_const ? &c.psi : &c.phi;
  if (!phi_const && !psi_const && c.psi.degree() < c.phi.degree()) g = &c.psi;
  int d = g->degree();
  Rat lc = g->lc();
  if (lc.sign() < 0 && d % 2 == 0) return c;  // no real scaling can make it monic
  Rat root(1);
  if (!rational_root(lc.abs().inv(), d, &root)) return c;
  Rat lam = lc.sign() < 0 ? -root : root;
  if (lam == Rat(1)) return c;
  return ParamCurve{affine_sub(c.phi, lam, Rat(0)), affine_sub(c.psi, lam, Rat(0))};
}

bool same_curve(const ParamCurve& a, const ParamCurve& b) {
  return implicitize(a) == implicitize(b);
}

std::string param_str(const ParamCurve& c) {
  return "(" + c.phi.str() + ", " + c.psi.str() + ")";
}

}  // namespace kellerscope
