#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <kellerscope/rng.hpp>
#include <kellerscope/tower.hpp>

using namespace kellerscope;

namespace {

struct QuadTowers {
  Caps caps;
  Tower<Rat> q2, q23;
  TElem<Rat> s2, s3;
  QuadTowers() {
    Tower<Rat> base;
    q2 = extend_field(base, {TElem<Rat>(-2), TElem<Rat>(0), TElem<Rat>(1)}, "r2", caps);
    s2 = TElem<Rat>::generator(q2);
    q23 = extend_field(q2, {TElem<Rat>(-3), TElem<Rat>(0), TElem<Rat>(1)}, "r3", caps);
    s3 = TElem<Rat>::generator(q23);
  }
};

}  // namespace

TEST_CASE("quadratic field arithmetic") {
  QuadTowers T;
  TElem<Rat> one(1);
  CHECK((one + T.s2) * (one - T.s2) == TElem<Rat>(-1));
  CHECK(T.s2 * T.s2 == TElem<Rat>(2));
  CHECK((T.s2 * T.s2).level() == nullptr);  // collapse to the base field
  CHECK(T.s2.inv() == T.s2 * TElem<Rat>(Rat(1, 2)));
  CHECK(T.s2.inv() * T.s2 == one);
  CHECK(T.s2.pow(-2) == TElem<Rat>(Rat(1, 2)));
  CHECK(T.s2.pow(0) == one);
  CHECK((T.s2 + T.s3).pow(2) == TElem<Rat>(5) + T.s2 * T.s3 * TElem<Rat>(2));
  CHECK((T.s2 + T.s3).inv() == T.s3 - T.s2);
  CHECK(exact_div(T.s2 * T.s3, T.s3) == T.s2);
}

TEST_CASE("cross-level lifting and equality") {
  QuadTowers T;
  TElem<Rat> a = T.s2 + TElem<Rat>(1);   // level q2
  TElem<Rat> b = T.s3 * T.s2;            // level q23
  CHECK((a * b).level().get() == T.q23.get());
  CHECK(a * b == T.s2 * b + b);
  CHECK(T.s2 * (T.s3 * T.s2) == T.s3 * TElem<Rat>(2));
  CHECK(TElem<Rat>(2) == T.s2.pow(2));
  CHECK(T.s2 != T.s3);
  CHECK(T.s3 - T.s3 == TElem<Rat>(0));
  CHECK((T.s3 - T.s3).is_zero());
}

TEST_CASE("printing uses generator names") {
  QuadTowers T;
  CHECK((T.s2 + TElem<Rat>(1)).str() == "r2 + 1");
  CHECK((T.s2 * T.s3).str() == "r2*r3");
  CHECK((T.s3 * TElem<Rat>(-2) + T.s2).str() == "-2*r3 + r2");
  CHECK(TElem<Rat>(Rat(-1, 3)).str() == "-1/3");
  auto desc = tower_description(T.q23);
  REQUIRE(desc.size() == 2);
  CHECK(desc[0].first == "r2");
  CHECK(desc[0].second == "r2^2 - 2");
  CHECK(desc[1].second == "r3^2 - 3");
}

TEST_CASE("incompatible towers are rejected") {
  QuadTowers T;
  Tower<Rat> base;
  Tower<Rat> other = extend_field(base, {TElem<Rat>(-2), TElem<Rat>(0), TElem<Rat>(1)}, "r2", T.caps);
  TElem<Rat> s2b = TElem<Rat>::generator(other);
  CHECK_THROWS_AS((void)(s2b + T.s3), InternalError);
}

TEST_CASE("capacity limits") {
  Caps caps;
  Tower<Rat> base;
  std::vector<TElem<Rat>> big(static_cast<std::size_t>(caps.ext_degree) + 2, TElem<Rat>(0));
  big.front() = TElem<Rat>(-2);
  big.back() = TElem<Rat>(1);
  CHECK_THROWS_AS((void)extend_field(base, big, "g", caps), CapacityError);

  Tower<Rat> t = base;
  for (int h = 1; h <= caps.tower_height; ++h)
    t = extend_field(t, {TElem<Rat>(-(2 + h)), TElem<Rat>(0), TElem<Rat>(1)}, "", caps);
  CHECK(tower_height(t) == caps.tower_height);
  CHECK_THROWS_AS((void)extend_field(t, {TElem<Rat>(-11), TElem<Rat>(0), TElem<Rat>(1)}, "", caps),
                  CapacityError);
  CHECK(t->gen == "a" + std::to_string(caps.tower_height));
}

TEST_CASE("degrees, flattening, and subfields") {
  QuadTowers T;
  CHECK(tower_degree(T.q23) == 4);
  CHECK(tower_degree(T.q2) == 2);
  CHECK(tower_degree(Tower<Rat>()) == 1);

  auto v = flatten(T.s2 * T.s3, T.q23);  // basis 1, r2, r3, r2*r3
  REQUIRE(v.size() == 4);
  CHECK(v[0] == Rat(0));
  CHECK(v[1] == Rat(0));
  CHECK(v[2] == Rat(0));
  CHECK(v[3] == Rat(1));
  auto w = flatten(T.s3, T.q23);
  CHECK(w[2] == Rat(1));
  CHECK(w[3] == Rat(0));
  auto u = flatten(T.s2, T.q23);  // lifted from the lower level
  CHECK(u[1] == Rat(1));

  CHECK(subfield_degree_over_q<Rat>({}, T.q23) == 1);
  CHECK(subfield_degree_over_q<Rat>({TElem<Rat>(7)}, T.q23) == 1);
  CHECK(subfield_degree_over_q<Rat>({T.s2}, T.q23) == 2);
  CHECK(subfield_degree_over_q<Rat>({T.s2 + T.s3}, T.q23) == 4);
  CHECK(subfield_degree_over_q<Rat>({T.s2, T.s3}, T.q23) == 4);
}

TEST_CASE("minimal polynomials over the base field") {
  QuadTowers T;
  UniPoly<Rat> sd("z", {Rat(1), Rat(0), Rat(-10), Rat(0), Rat(1)});
  CHECK(minpoly_over_base(T.s2 + T.s3, T.q23) == sd);
  CHECK(minpoly_over_base(T.s2, T.q23) == UniPoly<Rat>("z", {Rat(-2), Rat(0), Rat(1)}));
  CHECK(minpoly_over_base(TElem<Rat>(5), T.q23) == UniPoly<Rat>("z", {Rat(-5), Rat(1)}));
}

TEST_CASE("towers over the rational function field track t") {
  Caps caps;
  Tower<RatFunc> base;
  RatFunc t = RatFunc::variable();
  Tower<RatFunc> rt =
      extend_field(base, {TElem<RatFunc>(RatFunc(0) - t), TElem<RatFunc>(0), TElem<RatFunc>(1)}, "s", caps);
  CHECK(rt->involves_t);
  TElem<RatFunc> g = TElem<RatFunc>::generator(rt);
  CHECK(g * g == TElem<RatFunc>(t));
  CHECK_FALSE(is_t_free(g));
  CHECK(is_t_free(TElem<RatFunc>(RatFunc(Rat(3, 2)))));
  CHECK(minpoly_over_base(g, rt) == UniPoly<RatFunc>("z", {RatFunc(0) - t, RatFunc(0), RatFunc(1)}));

  Tower<RatFunc> r2 =
      extend_field(base, {TElem<RatFunc>(-2), TElem<RatFunc>(0), TElem<RatFunc>(1)}, "c", caps);
  CHECK_FALSE(r2->involves_t);
  TElem<RatFunc> c = TElem<RatFunc>::generator(r2);
  CHECK(is_t_free(c));
  CHECK_FALSE(is_t_free(c * TElem<RatFunc>(t)));
  CHECK(is_t_free(c + TElem<RatFunc>(5)));
  CHECK(subfield_degree_over_q<RatFunc>({c}, r2) == 2);

  // A t-free generator stacked above a t-involving level still counts t-free.
  Tower<RatFunc> mixed =
      extend_field(rt, {TElem<RatFunc>(-2), TElem<RatFunc>(0), TElem<RatFunc>(1)}, "c", caps);
  CHECK_FALSE(mixed->involves_t);
  TElem<RatFunc> cm = TElem<RatFunc>::generator(mixed);
  CHECK(is_t_free(cm));
  CHECK_FALSE(is_t_free(cm * g));
  CHECK_FALSE(is_t_free(cm + g));
}

TEST_CASE("reducible minpoly surfaces as a zero divisor") {
  Caps caps;
  Tower<Rat> base;
  Tower<Rat> bad = extend_field(base, {TElem<Rat>(-1), TElem<Rat>(0), TElem<Rat>(1)}, "e", caps);
  TElem<Rat> g = TElem<Rat>::generator(bad);
  CHECK(((g - TElem<Rat>(1)) * (g + TElem<Rat>(1))).is_zero());
  CHECK_THROWS_AS((void)(g - TElem<Rat>(1)).inv(), InternalError);
}

TEST_CASE("polynomials over a tower") {
  QuadTowers T;
  using P = UniPoly<TElem<Rat>>;
  P z = P::variable("z");
  P f = (z - P::constant("z", T.s2)) * (z + P::constant("z", TElem<Rat>(1)));
  P g = z - P::constant("z", T.s2);
  CHECK(gcd_poly(f, g) == g);
  CHECK(f.eval(T.s2).is_zero());
  CHECK(f.str() == "z^2 + (-r2 + 1)*z - r2");
}

TEST_CASE("random field axioms") {
  QuadTowers T;
  Rng rng(20260814);
  auto rand_elem = [&]() {
    TElem<Rat> r(0);
    const TElem<Rat> basis[4] = {TElem<Rat>(1), T.s2, T.s3, T.s2 * T.s3};
    for (const auto& b : basis)
      r = r + b * TElem<Rat>(Rat(static_cast<int>(rng.next_range(-4, 4)),
                                 static_cast<int>(rng.next_range(1, 3))));
    return r;
  };
  for (int it = 0; it < 40; ++it) {
    TElem<Rat> x = rand_elem(), y = rand_elem(), z = rand_elem();
    CHECK(x + y == y + x);
    CHECK((x + y) * z == x * z + y * z);
    CHECK((x * y) * z == x * (y * z));
    if (!x.is_zero()) {
      CHECK(x * x.inv() == TElem<Rat>(1));
      CHECK(exact_div(x * y, x) == y);
    }
    CHECK(x.pow(3) == x * x * x);
  }
}
