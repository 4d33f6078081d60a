#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kellerscope/matrix.hpp"
#include "kellerscope/rat.hpp"
#include "kellerscope/rng.hpp"
#include "kellerscope/unipoly.hpp"

using namespace kellerscope;

using QP = UniPoly<Rat>;

namespace {

QP qp(std::vector<Rat> ascending, std::string var = "x") {
  return QP(std::move(var), std::move(ascending));
}

QP random_poly(Rng& rng, int max_deg, const std::string& var = "x") {
  int d = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_deg + 1)));
  std::vector<Rat> cs;
  for (int i = 0; i <= d; ++i)
    cs.push_back(Rat(static_cast<int>(rng.next_range(-9, 9)), 1 + static_cast<int>(rng.next_below(4))));
  if (!cs.empty() && cs.back().is_zero()) cs.back() = Rat(1);
  return qp(std::move(cs), var);
}

}  // namespace

TEST_CASE("rational parsing and arithmetic") {
  CHECK(Rat::parse("3/6") == Rat(1, 2));
  CHECK(Rat::parse("-4/2") == Rat(-2));
  CHECK(Rat::parse("0/5").is_zero());
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
  CHECK(Rat(5).pow(-2) == Rat(1, 25));
  CHECK((Rat(-7, 3)).abs() == Rat(7, 3));
  CHECK(Rat(7, 2).str() == "7/2");
  CHECK(Rat(-3).str() == "-3");
  CHECK_THROWS_AS(Rat(1) / Rat(0), UsageError);
  CHECK_THROWS_AS(Rat::parse("1/0"), UsageError);
  CHECK_THROWS_AS(Rat::parse("x"), UsageError);
  CHECK(gcd(Rat(4, 6), Rat(2, 9)) == Rat(2, 9));
  CHECK(gcd(Rat(1, 2), Rat(1, 3)) == Rat(1, 6));
  CHECK(Rat(5, 3) < Rat(7, 4));
  CHECK(Rat(1, 2).to_double() == doctest::Approx(0.5));
}

TEST_CASE("rng is the standard splitmix64 stream") {
  Rng a(0);
  CHECK(a.next_u64() == 0xE220A8397B1DCDAFull);
  CHECK(a.next_u64() == 0x6E789E6AA1B965F4ull);
  Rng b(0);
  b.next_u64();
  CHECK(b.next_u64() == 0x6E789E6AA1B965F4ull);
  Rng c(12345);
  for (int i = 0; i < 100; ++i) {
    long v = c.next_range(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
}

TEST_CASE("bareiss determinant on rational matrices") {
  auto div = [](Rat a, const Rat& b) { return a / b; };
  auto isz = [](const Rat& a) { return a.is_zero(); };
  CHECK(bareiss_det<Rat>({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}}, div, isz) == Rat(-2));
  CHECK(bareiss_det<Rat>({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}, div, isz) == Rat(0));
  CHECK(bareiss_det<Rat>({{Rat(2), Rat(0), Rat(1)},
                          {Rat(1), Rat(1), Rat(0)},
                          {Rat(0), Rat(3), Rat(1)}},
                         div, isz) == Rat(5));
  // Row swap needed to find a pivot; sign must flip.
  CHECK(bareiss_det<Rat>({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}, div, isz) == Rat(-1));
}

TEST_CASE("univariate division, gcd, squarefree part") {
  QP f = qp({Rat(1), Rat(-2), Rat(0), Rat(1)});  // x^3 - 2x + 1
  QP b = qp({Rat(-1), Rat(1)});                  // x - 1
  auto [q, r] = divmod(f, b);
  CHECK(r.is_zero());
  CHECK(q == qp({Rat(-1), Rat(1), Rat(1)}));  // x^2 + x - 1

  CHECK(gcd_poly(qp({Rat(1), Rat(0), Rat(1)}), qp({Rat(0), Rat(1), Rat(1)})) == qp({Rat(1)}));
  CHECK(gcd_poly(qp({Rat(-1), Rat(0), Rat(1)}), qp({Rat(1), Rat(-2), Rat(1)})) ==
        qp({Rat(-1), Rat(1)}));

  // (x-1)^2 (x+2) = x^3 - 3x + 2; squarefree part x^2 + x - 2.
  QP g = qp({Rat(2), Rat(-3), Rat(0), Rat(1)});
  CHECK(squarefree_part_field(g) == qp({Rat(-2), Rat(1), Rat(1)}));
}

TEST_CASE("division invariant on random pairs") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    QP a = random_poly(rng, 8);
    QP b = random_poly(rng, 5);
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("polynomial printing") {
  CHECK(qp({}).str() == "0");
  CHECK(qp({Rat(1), Rat(0), Rat(-1)}).str() == "-x^2 + 1");
  CHECK(qp({Rat(0), Rat(1, 2)}).str() == "1/2*x");
  CHECK(qp({Rat(1), Rat(-2), Rat(1)}).str() == "x^2 - 2*x + 1");
  CHECK(qp({Rat(0), Rat(-1, 3), Rat(0), Rat(-2)}).str() == "-2*x^3 - 1/3*x");
  CHECK(qp({Rat(3)}, "t").str() == "3");
  CHECK(QP::variable("w").pow(3).str() == "w^3");
}

TEST_CASE("compose, eval, derivative") {
  QP f = qp({Rat(1), Rat(0), Rat(1)});  // x^2 + 1
  QP inner = qp({Rat(1), Rat(1)});      // x + 1
  CHECK(f.compose(inner) == qp({Rat(2), Rat(2), Rat(1)}));
  CHECK(f.eval(Rat(2)) == Rat(5));
  CHECK(f.derivative() == qp({Rat(0), Rat(2)}));
  CHECK(qp({Rat(4)}).derivative().is_zero());
}

TEST_CASE("variable tags mix only through constants") {
  QP ft = qp({Rat(1), Rat(1)}, "t");
  QP c = QP::constant("x", Rat(2));
  CHECK((ft + c).var() == "t");
  CHECK((c * ft).var() == "t");
  QP fx = qp({Rat(1), Rat(1)}, "x");
  CHECK_THROWS_AS(ft + fx, UsageError);
}

TEST_CASE("resultant oracles") {
  // Hand-expanded 3x3 Sylvester determinant for (x - 1, x^2 + 1).
  QP f = qp({Rat(-1), Rat(1)});
  QP g = qp({Rat(1), Rat(0), Rat(1)});
  CHECK(resultant(f, g) == Rat(2));

  // Degenerate-degree conventions.
  CHECK(resultant(qp({Rat(5)}), g) == Rat(25));
  CHECK(resultant(qp({Rat(-1), Rat(0), Rat(0), Rat(1)}), qp({Rat(2)})) == Rat(8));
  CHECK(resultant(qp({Rat(3)}), qp({Rat(4)})) == Rat(1));
  CHECK(resultant(qp({}), g) == Rat(0));

  // Shared root forces a zero resultant.
  CHECK(resultant(qp({Rat(-1), Rat(1)}), qp({Rat(-1), Rat(0), Rat(1)})) == Rat(0));
  CHECK(resultant(qp({Rat(-1), Rat(1)}), qp({Rat(1), Rat(0), Rat(1)})) != Rat(0));
}

TEST_CASE("resultant over polynomial coefficients") {
  using QQP = UniPoly<QP>;
  QP t = QP::variable("t");
  // f = x^2 - t, g = x; pins the Sylvester row convention: result is -t.
  QQP f("x", {-t, QP::constant("t", Rat(0)), QP::constant("t", Rat(1))});
  QQP g("x", {QP::constant("t", Rat(0)), QP::constant("t", Rat(1))});
  CHECK(resultant(f, g) == -t);

  // f = x^2 - t, g = x - t: common root when t^2 = t, resultant t^2 - t.
  QQP h("x", {-t, QP::constant("t", Rat(1))});
  QP expect = t * t - t;
  CHECK(resultant(f, h) == expect);
}

TEST_CASE("resultant multiplicativity and swap sign on random polynomials") {
  Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    QP f = random_poly(rng, 4);
    QP g = random_poly(rng, 4);
    QP h = random_poly(rng, 3);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    if (f.degree() == 0 || g.degree() == 0 || h.degree() == 0) continue;
    CHECK(resultant(f * h, g) == resultant(f, g) * resultant(h, g));
    Rat sign = ((f.degree() * g.degree()) % 2 == 0) ? Rat(1) : Rat(-1);
    CHECK(resultant(f, g) == sign * resultant(g, f));
  }
}
