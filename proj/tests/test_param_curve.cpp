#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "kellerscope/param_curve.hpp"

using namespace kellerscope;

namespace {

// Coefficients ascending in xi.
UniPoly<Rat> xi(std::vector<Rat> cs) {
  UniPoly<Rat> p("xi");
  for (std::size_t i = 0; i < cs.size(); ++i) p.set_coeff(static_cast<int>(i), cs[i]);
  return p;
}

ParamCurve curve(std::vector<Rat> phi, std::vector<Rat> psi) {
  return make_param_curve(xi(std::move(phi)), xi(std::move(psi)));
}

BiPoly mono(Rat c, int i, int j) { return BiPoly::monomial(c, i, j, "u", "v"); }

// f(phi(xi), psi(xi)) as a polynomial in xi.
UniPoly<Rat> pullback(const BiPoly& f, const ParamCurve& c) {
  UniPoly<Rat> r("xi");
  for (const auto& [k, co] : f.terms())
    r = r + (c.phi.pow(k.first) * c.psi.pow(k.second)).scaled(co);
  return r;
}

}  // namespace

TEST_CASE("constant-coordinate curves implicitize to coordinate lines") {
  CHECK(implicitize(curve({Rat(0)}, {Rat(0), Rat(1)})) == mono(Rat(1), 1, 0));          // u
  CHECK(implicitize(curve({Rat(0), Rat(1)}, {Rat(0)})) == mono(Rat(1), 0, 1));          // v
  CHECK(implicitize(curve({Rat(3)}, {Rat(0), Rat(2)})) ==
        mono(Rat(1), 1, 0) - mono(Rat(3), 0, 0));                                       // u - 3
}

TEST_CASE("graph curves implicitize to their graphs") {
  CHECK(implicitize(curve({Rat(0), Rat(1)}, {Rat(0), Rat(0), Rat(1)})) ==
        mono(Rat(1), 0, 1) - mono(Rat(1), 2, 0));  // v - u^2
  CHECK(implicitize(curve({Rat(1), Rat(1)}, {Rat(-1), Rat(1)})) ==
        mono(Rat(1), 0, 1) - mono(Rat(1), 1, 0) + mono(Rat(2), 0, 0));  // v - u + 2
  CHECK(implicitize(curve({Rat(1), Rat(2)}, {Rat(0), Rat(1)})) ==
        mono(Rat(2), 0, 1) - mono(Rat(1), 1, 0) + mono(Rat(1), 0, 0));  // 2v - u + 1
}

TEST_CASE("cuspidal curves implicitize with the positive leading v power") {
  BiPoly cusp = mono(Rat(1), 0, 2) - mono(Rat(1), 3, 0);  // v^2 - u^3
  CHECK(implicitize(curve({Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(0), Rat(0), Rat(1)})) == cusp);
  BiPoly cusp_t = mono(Rat(1), 0, 3) - mono(Rat(1), 2, 0);  // v^3 - u^2
  CHECK(implicitize(curve({Rat(0), Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(0), Rat(1)})) == cusp_t);
}

TEST_CASE("implicitization is square-free under multiple tracing") {
  // (xi^2, xi^6) traces v = u^3 twice.
  ParamCurve c = curve({Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
  CHECK(implicitize(c) == mono(Rat(1), 0, 1) - mono(Rat(1), 3, 0));
}

TEST_CASE("the parametrization satisfies its implicit equation") {
  std::vector<ParamCurve> cs = {
      curve({Rat(0), Rat(1)}, {Rat(0), Rat(0), Rat(1)}),
      curve({Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(0), Rat(0), Rat(1)}),
      curve({Rat(1), Rat(2)}, {Rat(0), Rat(1)}),
      curve({Rat(2), Rat(-3), Rat(0), Rat(5)}, {Rat(1), Rat(1), Rat(7)}),
      curve({Rat(1, 2), Rat(1, 3)}, {Rat(0), Rat(0), Rat(2, 5)}),
  };
  for (const ParamCurve& c : cs) {
    BiPoly f = implicitize(c);
    CHECK(pullback(f, c).is_zero());
    CHECK(f == canonical_curve(f));
  }
}

TEST_CASE("same_curve identifies reparametrizations") {
  ParamCurve a = curve({Rat(0), Rat(1)}, {Rat(0), Rat(0), Rat(1)});
  ParamCurve b = curve({Rat(1), Rat(2)}, {Rat(1), Rat(4), Rat(4)});  // (2xi+1, (2xi+1)^2)
  CHECK(same_curve(a, b));
  ParamCurve c = curve({Rat(0), Rat(1)}, {Rat(0), Rat(0), Rat(-1)});
  CHECK(!same_curve(a, c));
}

TEST_CASE("canonical_curve fixes content and sign") {
  BiPoly f = mono(Rat(-2), 2, 0) + mono(Rat(4), 0, 1);  // -2u^2 + 4v
  BiPoly g = canonical_curve(f);
  CHECK(g == mono(Rat(-1), 2, 0) + mono(Rat(2), 0, 1));
  CHECK(canonical_curve(g.scaled(Rat(-7, 3))) == g);
  // Highest v power decides the sign even at lower total degree.
  BiPoly h = mono(Rat(-1), 0, 1) + mono(Rat(1), 3, 0);  // -v + u^3
  CHECK(canonical_curve(h) == mono(Rat(1), 0, 1) - mono(Rat(1), 3, 0));
}

TEST_CASE("normalize_param straightens a degree-1 coordinate") {
  ParamCurve c = normalize_param(curve({Rat(1), Rat(2)}, {Rat(0), Rat(1)}));
  CHECK(c.phi == xi({Rat(0), Rat(1)}));
  CHECK(c.psi == xi({Rat(-1, 2), Rat(1, 2)}));
  CHECK(same_curve(c, curve({Rat(1), Rat(2)}, {Rat(0), Rat(1)})));

  ParamCurve d = normalize_param(curve({Rat(3)}, {Rat(4), Rat(2)}));
  CHECK(d.phi == xi({Rat(3)}));
  CHECK(d.psi == xi({Rat(0), Rat(1)}));
}

TEST_CASE("normalize_param rescales by rational roots when possible") {
  ParamCurve c = normalize_param(curve({Rat(0), Rat(0), Rat(4)}, {Rat(0), Rat(0), Rat(0), Rat(1)}));
  CHECK(c.phi == xi({Rat(0), Rat(0), Rat(1)}));
  CHECK(c.psi == xi({Rat(0), Rat(0), Rat(0), Rat(1, 8)}));

  // 1/2 is not a rational square; the curve is left alone.
  ParamCurve d = curve({Rat(0), Rat(0), Rat(2)}, {Rat(0), Rat(0), Rat(0), Rat(1)});
  ParamCurve e = normalize_param(d);
  CHECK(e.phi == d.phi);
  CHECK(e.psi == d.psi);

  // Negative leading coefficient with even degree cannot be made monic.
  ParamCurve f = curve({Rat(0), Rat(0), Rat(-1)}, {Rat(0), Rat(0), Rat(0), Rat(1)});
  ParamCurve g = normalize_param(f);
  CHECK(g.phi == f.phi);

  // Odd degree flips the sign of the scaling.
  ParamCurve h = normalize_param(curve({Rat(0), Rat(0), Rat(0), Rat(-8)}, {Rat(5)}));
  CHECK(h.phi == xi({Rat(0), Rat(0), Rat(0), Rat(1)}));
}

TEST_CASE("parametrizations of points are rejected") {
  CHECK_THROWS_AS(make_param_curve(xi({Rat(1)}), xi({Rat(2)})), UsageError);
  CHECK_THROWS_AS(make_param_curve(UniPoly<Rat>::variable("t"), xi({Rat(2)})), UsageError);
}
