#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "kellerscope/numeric.hpp"
#include "kellerscope/polymap.hpp"

using namespace kellerscope;

namespace {

Caps caps() { return Caps{}; }

bool near(Cx a, Cx b, double tol = 1e-9) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("rational to double conversion") {
  CHECK(to_double(Rat(1, 2)) == 0.5);
  CHECK(to_double(Rat(-7)) == -7.0);
  CHECK(std::abs(to_double(Rat(1, 3)) - 1.0 / 3.0) < 1e-15);
}

TEST_CASE("complex evaluation matches exact evaluation") {
  BiPoly f = parse_poly("x^2*y - 3*x + y^3 - 1/2");
  Rat xs(5, 3), ys(-7, 2);
  CHECK(near(eval_cx(f, Cx(to_double(xs)), Cx(to_double(ys))),
             Cx(to_double(f.eval(xs, ys))), 1e-12));
}

TEST_CASE("all_roots finds the roots of a factored polynomial") {
  // (z - 1)(z - 2i)(z + 3)(z - (1+i))
  std::vector<Cx> want = {Cx(1, 0), Cx(0, 2), Cx(-3, 0), Cx(1, 1)};
  std::vector<Cx> a = {Cx(1)};
  for (Cx w : want) {
    std::vector<Cx> b(a.size() + 1, Cx(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      b[i + 1] += a[i];
      b[i] -= w * a[i];
    }
    a = b;
  }
  std::vector<Cx> got = all_roots(a);
  REQUIRE(got.size() == want.size());
  for (Cx w : want) {
    double best = 1e300;
    for (Cx g : got) best = std::min(best, std::abs(g - w));
    CHECK(best < 1e-9);
  }
}

TEST_CASE("all_roots handles large spread fiber coefficients") {
  // y^2 + (R - 5): roots +- i sqrt(R-5) for R = 10^6
  UniPoly<Rat> p("y");
  p.set_coeff(0, Rat(1000000 - 5));
  p.set_coeff(2, Rat(1));
  std::vector<Cx> r = all_roots(p);
  REQUIRE(r.size() == 2);
  double m = std::sqrt(1e6 - 5.0);
  CHECK(std::abs(std::abs(r[0].imag()) - m) < 1e-6 * m);
  CHECK(std::abs(r[0].real()) < 1e-6 * m);
  CHECK(std::abs(r[0] + r[1]) < 1e-6 * m);
}

TEST_CASE("tower embeddings enumerate conjugates") {
  // Tower Q(t)(s)/(s^2 - t): embeddings at t0 = 7 are s -> +-sqrt(7).
  Caps cp = caps();
  PencilAnalysis an = analyze_pencil(parse_poly("x^2"), cp);
  REQUIRE(an.places.size() >= 1);
  const PuiseuxPlace<RatFunc>* deep = nullptr;
  for (const auto& pl : an.places)
    if (pl.conj == 2) deep = &pl;
  REQUIRE(deep != nullptr);
  std::vector<Embedding> embs = tower_embeddings(deep->tower, Rat(7));
  REQUIRE(embs.size() == 2);
  double s7 = std::sqrt(7.0);
  CHECK(std::abs(std::abs(embs[0].gen[0].real()) - s7) < 1e-9);
  CHECK(near(embs[0].gen[0], -embs[1].gen[0]));
}

TEST_CASE("small_solutions solves a Laurent series equation") {
  // s(S) = S^-2 + 3: solutions of s(S) = R are S = +-(R-3)^(-1/2).
  CxSeries s;
  s.terms[-2] = Cx(1);
  s.terms[0] = Cx(3);
  std::vector<Cx> sols = small_solutions(s, Cx(1000.0));
  REQUIRE(sols.size() == 2);
  for (Cx S : sols) CHECK(near(eval_cx(s, S), Cx(1000.0), 1e-10));
  CHECK(near(sols[0], -sols[1], 1e-9));
}

TEST_CASE("clustering oracle on the simplicity corpus") {
  Caps cp = caps();
  for (const char* src : {"x", "x*y", "x + y^2", "x + x^2*y", "x^2"}) {
    CAPTURE(src);
    BiPoly p = parse_poly(src);
    PencilAnalysis an = analyze_pencil(p, cp);
    for (long t0 : {5L, 7L, 11L}) {
      for (double R : {1e3, 1e6}) {
        CAPTURE(t0);
        CAPTURE(R);
        FiberCheck fc = clustering_oracle(p, an, Rat(t0), R, cp);
        CAPTURE(fc.detail);
        CHECK(fc.ok);
        REQUIRE(fc.clusters_per_component.size() == an.components.size());
        for (std::size_t i = 0; i < an.components.size(); ++i)
          CHECK(fc.clusters_per_component[i] == an.components[i].restriction_degree);
      }
    }
  }
}

TEST_CASE("clustering oracle on a non-monic mixed pencil") {
  Caps cp = caps();
  BiPoly p = parse_poly("x^2*y^2 + x");
  PencilAnalysis an = analyze_pencil(p, cp);
  FiberCheck fc = clustering_oracle(p, an, Rat(5), 1e3, cp);
  CAPTURE(fc.detail);
  CHECK(fc.ok);
}
