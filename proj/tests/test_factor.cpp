#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <kellerscope/factor.hpp>
#include <kellerscope/rng.hpp>
#include <kellerscope/zp.hpp>

using namespace kellerscope;

namespace {

using QP = UniPoly<Rat>;

QP qp(std::vector<int> ascending, std::string var = "x") {
  std::vector<Rat> cs(ascending.begin(), ascending.end());
  return QP(var, cs);
}

QP random_poly(Rng& rng, int max_deg) {
  int d = static_cast<int>(rng.next_below(max_deg)) + 1;
  std::vector<Rat> cs(d + 1);
  for (auto& c : cs) c = Rat(rng.next_range(-6, 6));
  while (cs.back().is_zero()) cs.back() = Rat(rng.next_range(-6, 6));
  return QP("x", cs);
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const std::uint64_t p = 1000000007ull;
  CHECK(mul_mod(p - 1, p - 1, p) == 1);
  CHECK(pow_mod(2, 100, p) == 976371285ull);  // 2^100 mod 1e9+7
  CHECK(mul_mod(inv_mod(12345, p), 12345, p) == 1);
  CHECK(is_prime_u64(1000000007ull));
  CHECK(is_prime_u64(998244353ull));
  CHECK(is_prime_u64(2305843009213693951ull));  // 2^61 - 1
  CHECK_FALSE(is_prime_u64(1000000011ull));
  CHECK_FALSE(is_prime_u64(1));

  std::uint64_t e0 = nth_engine_prime(0);
  std::uint64_t e1 = nth_engine_prime(1);
  CHECK(is_prime_u64(e0));
  CHECK(is_prime_u64(e1));
  CHECK(e0 < (1ull << 62));
  CHECK(e1 < e0);
}

TEST_CASE("mod-p polynomial arithmetic and resultants") {
  const std::uint64_t p = 101;
  ZPoly f{1, 0, 1};  // x^2 + 1
  ZPoly g{100, 1};   // x - 1
  CHECK(zp_eval(f, 10, p) == 0);  // 100 + 1 = 101 = 0
  ZPoly prod = zp_mul(f, g, p);
  ZPoly q, r;
  zp_divmod(prod, g, p, &q, &r);
  CHECK(r.empty());
  CHECK(q == f);
  CHECK(zp_gcd(prod, g, p) == zp_monic(g, p));
  // res(x^2 + 1, x - 1) = f(1) = 2 for monic g.
  CHECK(zp_resultant(f, g, p) == 2);
  // res swaps with sign (-1)^(deg f * deg g).
  CHECK(zp_resultant(g, f, p) == 2);

  Rng rng(7);
  ZpFactorization zf = zp_factor(zp_mul(zp_mul(f, g, p), g, p), p, rng);
  ZPoly back{1};
  for (const auto& [fac, m] : zf.factors) {
    CHECK(fac.back() == 1);
    for (int i = 0; i < m; ++i) back = zp_mul(back, fac, p);
  }
  back = zp_scale(back, zf.unit, p);
  CHECK(back == zp_mul(zp_mul(f, g, p), g, p));
}

TEST_CASE("Yun squarefree decomposition") {
  QP f = (qp({-1, 1})).pow(2) * qp({2, 1});  // (x-1)^2 (x+2)
  auto parts = yun_squarefree(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == qp({2, 1}));
  CHECK(parts[0].second == 1);
  CHECK(parts[1].first == qp({-1, 1}));
  CHECK(parts[1].second == 2);

  auto squarefree = yun_squarefree(qp({-1, 0, 1}));
  REQUIRE(squarefree.size() == 1);
  CHECK(squarefree[0].first == qp({-1, 0, 1}));
  CHECK(squarefree[0].second == 1);
}

TEST_CASE("rational factorization oracles") {
  Caps caps;
  auto factor_strings = [&](const QP& f) {
    std::vector<std::string> out;
    for (const auto& [fac, m] : factor_rational(f, caps).factors) {
      out.push_back(fac.str() + (m > 1 ? "^" + std::to_string(m) : ""));
    }
    return out;
  };

  CHECK(factor_strings(qp({-1, 0, 1})) == std::vector<std::string>{"x + 1", "x - 1"});
  CHECK(factor_strings(qp({1, 0, 1})) == std::vector<std::string>{"x^2 + 1"});
  CHECK(factor_strings(qp({-4, 0, 0, 0, 1})) ==
        std::vector<std::string>{"x^2 + 2", "x^2 - 2"});
  CHECK(factor_strings(qp({-1, 0, 0, 0, 0, 0, 1})) ==
        std::vector<std::string>{"x + 1", "x - 1", "x^2 + x + 1", "x^2 - x + 1"});

  FactorizationQ nonmonic = factor_rational(qp({-2, 0, 2}), caps);
  CHECK(nonmonic.unit == Rat(2));
  REQUIRE(nonmonic.factors.size() == 2);

  FactorizationQ rep = factor_rational(qp({-1, 1}).pow(3) * qp({-2, 0, 1}).pow(2), caps);
  REQUIRE(rep.factors.size() == 2);
  CHECK(rep.factors[0].first == qp({-1, 1}));
  CHECK(rep.factors[0].second == 3);
  CHECK(rep.factors[1].first == qp({-2, 0, 1}));
  CHECK(rep.factors[1].second == 2);

  // Swinnerton-Dyer style: minimal polynomial of sqrt(2) + sqrt(3), irreducible
  // over Q but reducible mod every prime.
  CHECK(factor_strings(qp({1, 0, -10, 0, 1})) == std::vector<std::string>{"x^4 - 10*x^2 + 1"});

  Caps tiny;
  tiny.factor_degree = 3;
  CHECK_THROWS_AS(factor_rational(qp({-4, 0, 0, 0, 1}), tiny), CapacityError);
}

TEST_CASE("random factorizations re-multiply") {
  Caps caps;
  Rng rng(99);
  for (int it = 0; it < 40; ++it) {
    QP f = random_poly(rng, 6) * random_poly(rng, 6);
    FactorizationQ fz = factor_rational(f, caps);
    QP back = QP::constant("x", fz.unit);
    for (const auto& [fac, m] : fz.factors) {
      CHECK(fac.lc() == Rat(1));
      for (int i = 0; i < m; ++i) back = back * fac;
    }
    CHECK(back == f);
  }
}

TEST_CASE("integer reconstruction helpers") {
  mpz_class p("1000000007");
  mpz_class q("998244353");
  mpz_class x = crt_combine(5, p, 11, q);
  CHECK(x % p == 5);
  CHECK(x % q == 11);

  // Reconstruct 22/7 from its residue mod p.
  mpz_class inv7;
  mpz_invert(inv7.get_mpz_t(), mpz_class(7).get_mpz_t(), p.get_mpz_t());
  mpz_class a = 22 * inv7 % p;
  Rat out;
  REQUIRE(rational_reconstruct(a, p, &out));
  CHECK(out == Rat(22, 7));

  mpz_class neg = p - 3;  // -3 mod p
  REQUIRE(rational_reconstruct(neg, p, &out));
  CHECK(out == Rat(-3));

  CHECK(symmetric_mod(mpz_class(7), mpz_class(10)) == -3);
  CHECK(symmetric_mod(mpz_class(5), mpz_class(10)) == 5);
  CHECK(symmetric_mod(mpz_class(-7), mpz_class(10)) == 3);
}
