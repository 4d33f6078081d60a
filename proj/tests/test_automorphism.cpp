#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "kellerscope/automorphism.hpp"

using namespace kellerscope;

namespace {

UniPoly<Rat> xi(std::vector<Rat> cs) {
  UniPoly<Rat> p("xi");
  for (std::size_t i = 0; i < cs.size(); ++i) p.set_coeff(static_cast<int>(i), cs[i]);
  return p;
}

UniPoly<Rat> h_poly(std::vector<Rat> cs) {
  UniPoly<Rat> p("t");
  for (std::size_t i = 0; i < cs.size(); ++i) p.set_coeff(static_cast<int>(i), cs[i]);
  return p;
}

ParamCurve curve(std::vector<Rat> phi, std::vector<Rat> psi) {
  return make_param_curve(xi(std::move(phi)), xi(std::move(psi)));
}

ParamCurve line() { return curve({Rat(0), Rat(1)}, {Rat(0)}); }

bool is_line_image(const ParamCurve& c) {
  return c.phi == xi({Rat(0), Rat(1)}) && c.psi.is_zero();
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

}  // namespace

TEST_CASE("word application and inversion") {
  AutomorphismWord w;
  AffineStep mix;
  mix.a = Rat(2), mix.b = Rat(1), mix.c = Rat(1), mix.d = Rat(1), mix.e = Rat(-3), mix.f = Rat(5);
  w.steps.push_back(AutoStep::affine(mix));
  w.steps.push_back(AutoStep::elementary(ElementaryStep{true, h_poly({Rat(1), Rat(0), Rat(2)})}));
  w.steps.push_back(AutoStep::elementary(ElementaryStep{false, h_poly({Rat(0), Rat(-1), Rat(0), Rat(1)})}));

  PolyMap F = w.to_map();
  PolyMap G = w.inverse().to_map();
  CHECK(compose(F, G) == PolyMap::identity());
  CHECK(compose(G, F) == PolyMap::identity());
  CHECK(keller_check(F).is_keller);
  CHECK(keller_check(F).constant_value == w.jacobian_det());
  CHECK(w.jacobian_det() == Rat(1));
  CHECK(F.degree() == w.expected_degree());
  CHECK(w.expected_degree() == 6);
}

TEST_CASE("singular affine steps are rejected") {
  AffineStep s;
  s.a = Rat(2), s.b = Rat(4), s.c = Rat(1), s.d = Rat(2);
  CHECK_THROWS_AS(AutoStep::affine(s), UsageError);
}

TEST_CASE("applying a word to a curve matches applying its map") {
  AutomorphismWord w;
  w.steps.push_back(AutoStep::elementary(ElementaryStep{false, h_poly({Rat(0), Rat(0), Rat(1)})}));
  ParamCurve c = w.apply(line());
  CHECK(c.phi == xi({Rat(0), Rat(1)}));
  CHECK(c.psi == xi({Rat(0), Rat(0), Rat(1)}));  // (xi, xi^2)
}

TEST_CASE("rectifying the parabola produces the expected automorphism") {
  RectifyOutcome out = am_rectify(curve({Rat(0), Rat(1)}, {Rat(0), Rat(0), Rat(1)}));
  REQUIRE(out.status == RectifyStatus::LINE);
  CHECK(is_line_image(out.word.apply(curve({Rat(0), Rat(1)}, {Rat(0), Rat(0), Rat(1)}))));
  // The composed map is exactly (u, v - u^2).
  CHECK(out.word.to_map() == parse_map("x ; y - x^2"));
}

TEST_CASE("the cusp is rejected with a derivative witness") {
  RectifyOutcome out = am_rectify(curve({Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(0), Rat(0), Rat(1)}));
  REQUIRE(out.status == RectifyStatus::NOT_EMBEDDING);
  CHECK(starts_with(out.reason, "derivative"));
}

TEST_CASE("the line itself needs no steps") {
  RectifyOutcome out = am_rectify(line());
  REQUIRE(out.status == RectifyStatus::LINE);
  CHECK(out.word.steps.empty());
}

TEST_CASE("nodal curves fail rectification") {
  // (xi^2 - 1, xi^3 - xi) has a node at the origin.
  RectifyOutcome out = am_rectify(curve({Rat(-1), Rat(0), Rat(1)}, {Rat(0), Rat(-1), Rat(0), Rat(1)}));
  REQUIRE(out.status == RectifyStatus::NOT_EMBEDDING);
  CHECK(starts_with(out.reason, "divisibility"));
  // (xi^2, xi^3 + xi) has a complex node.
  RectifyOutcome out2 = am_rectify(curve({Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(0), Rat(1)}));
  REQUIRE(out2.status == RectifyStatus::NOT_EMBEDDING);
}

TEST_CASE("rectification handles affine-translated embeddings") {
  // (2xi + 1, xi^4 - 3xi + 2): degrees 1 and 4.
  ParamCurve c = curve({Rat(1), Rat(2)}, {Rat(2), Rat(-3), Rat(0), Rat(0), Rat(1)});
  RectifyOutcome out = am_rectify(c);
  REQUIRE(out.status == RectifyStatus::LINE);
  CHECK(is_line_image(out.word.apply(c)));
  PolyMap m = out.word.to_map();
  CHECK(keller_check(m).is_keller);
}

TEST_CASE("graph rectification peels a graph in one elementary step") {
  ParamCurve c = curve({Rat(0), Rat(1)}, {Rat(2), Rat(0), Rat(0), Rat(1)});
  AutomorphismWord w = graph_rectify(c);
  REQUIRE(w.steps.size() == 1);
  CHECK(w.to_map() == parse_map("x ; y - x^3 - 2"));
  ParamCurve img = w.apply(c);
  CHECK(img.psi.is_zero());
  CHECK(w.jacobian_det() == Rat(1));

  ParamCurve d = curve({Rat(1), Rat(2)}, {Rat(0), Rat(1)});
  AutomorphismWord wd = graph_rectify(d);
  ParamCurve img_d = wd.apply(d);
  CHECK(img_d.psi.is_zero());
  CHECK(img_d.phi == d.phi);

  CHECK_THROWS_AS(graph_rectify(curve({Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(1)})), UsageError);
}

TEST_CASE("peeling inverts triangular automorphisms") {
  JvdkOutcome out = jvdk_invert(parse_map("x ; y + x^3"));
  REQUIRE(out.ok);
  CHECK(out.inverse.to_map() == parse_map("x ; y - x^3"));
}

TEST_CASE("peeling inverts the double-shear benchmark map") {
  JvdkOutcome out = jvdk_invert(parse_map("x + y^2 ; y - (x + y^2)^2"));
  REQUIRE(out.ok);
  CHECK(out.inverse.to_map() == parse_map("x - (y + x^2)^2 ; y + x^2"));
}

TEST_CASE("peeling survives a transient equal-degree stall") {
  // (x + y + x^2, x - y - x^2): the first subtraction lowers only one
  // coordinate's degree; the sum-based progress measure must accept it.
  JvdkOutcome out = jvdk_invert(parse_map("x + y + x^2 ; x - y - x^2"));
  REQUIRE(out.ok);
  PolyMap F = parse_map("x + y + x^2 ; x - y - x^2");
  CHECK(compose(out.inverse.to_map(), F) == PolyMap::identity());
}

TEST_CASE("peeling failure tags name the obstruction") {
  JvdkOutcome a = jvdk_invert(parse_map("x ; x*y"));
  CHECK(!a.ok);
  CHECK(starts_with(a.reason, "leading_forms"));

  JvdkOutcome b = jvdk_invert(parse_map("x + y^2 ; y^3"));
  CHECK(!b.ok);
  CHECK(starts_with(b.reason, "divisibility"));

  JvdkOutcome c = jvdk_invert(parse_map("x + y ; x + y + 1"));
  CHECK(!c.ok);
  CHECK(starts_with(c.reason, "affine_singular"));

  JvdkOutcome d = jvdk_invert(parse_map("x ; 1"));
  CHECK(!d.ok);
  CHECK(starts_with(d.reason, "constant_component"));
}

TEST_CASE("random tame words are deterministic and invertible") {
  Rng r1(42), r2(42);
  AutomorphismWord w1 = random_tame(r1), w2 = random_tame(r2);
  CHECK(w1.to_map() == w2.to_map());

  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Rng rng(seed);
    AutomorphismWord w = random_tame(rng);
    CHECK(w.steps.size() <= 6);
    PolyMap F = w.to_map();
    CHECK(F.degree() == w.expected_degree());
    CHECK(F.degree() <= 12);
    KellerCertificate kc = keller_check(F);
    CHECK(kc.is_keller);
    CHECK(kc.constant_value == w.jacobian_det());
    JvdkOutcome inv = jvdk_invert(F);
    REQUIRE(inv.ok);
    CHECK(inv.inverse.to_map() == w.inverse().to_map());
  }
}

TEST_CASE("random-word images of the line rectify back to the line") {
  for (std::uint64_t seed = 100; seed < 125; ++seed) {
    Rng rng(seed);
    AutomorphismWord w = random_tame(rng);
    ParamCurve c = w.apply(line());
    RectifyOutcome out = am_rectify(c);
    REQUIRE(out.status == RectifyStatus::LINE);
    CHECK(is_line_image(out.word.apply(c)));
    CHECK(keller_check(out.word.to_map()).is_keller);
  }
}
