#include "kellerscope/zp.hpp"

#include <algorithm>

namespace kellerscope {

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  require(a % p != 0, "inverse of zero mod p");
  return pow_mod(a, p - 2, p);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin witness set for 64-bit integers.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t nth_engine_prime(int index) {
  require(index >= 0, "prime index must be nonnegative");
  std::uint64_t candidate = (1ull << 62) - 1;
  int seen = 0;
  while (true) {
    if (is_prime_u64(candidate)) {
      if (seen == index) return candidate;
      ++seen;
    }
    candidate -= 2;
    ensure(candidate > (1ull << 61), "engine prime pool exhausted");
  }
}

void zp_trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int zp_deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly zp_add(const ZPoly& a, const ZPoly& b, std::uint64_t p) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0;
    std::uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = add_mod(x, y, p);
  }
  zp_trim(r);
  return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b, std::uint64_t p) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0;
    std::uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = sub_mod(x, y, p);
  }
  zp_trim(r);
  return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j], p), p);
    }
  }
  zp_trim(r);
  return r;
}

ZPoly zp_scale(const ZPoly& a, std::uint64_t c, std::uint64_t p) {
  c %= p;
  if (c == 0) return {};
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul_mod(a[i], c, p);
  zp_trim(r);
  return r;
}

void zp_divmod(const ZPoly& a, const ZPoly& b, std::uint64_t p, ZPoly* q, ZPoly* r) {
  require(!b.empty(), "polynomial division by zero mod p");
  ZPoly quo, rem = a;
  if (rem.size() >= b.size()) quo.assign(rem.size() - b.size() + 1, 0);
  std::uint64_t lcinv = inv_mod(b.back(), p);
  while (rem.size() >= b.size() && !rem.empty()) {
    std::uint64_t f = mul_mod(rem.back(), lcinv, p);
    std::size_t d = rem.size() - b.size();
    quo[d] = f;
    for (std::size_t i = 0; i < b.size(); ++i) {
      rem[d + i] = sub_mod(rem[d + i], mul_mod(f, b[i], p), p);
    }
    zp_trim(rem);
  }
  zp_trim(quo);
  if (q) *q = quo;
  if (r) *r = rem;
}

ZPoly zp_mod(const ZPoly& a, const ZPoly& b, std::uint64_t p) {
  ZPoly r;
  zp_divmod(a, b, p, nullptr, &r);
  return r;
}

ZPoly zp_monic(const ZPoly& a, std::uint64_t p) {
  if (a.empty()) return a;
  return zp_scale(a, inv_mod(a.back(), p), p);
}

ZPoly zp_gcd(ZPoly a, ZPoly b, std::uint64_t p) {
  while (!b.empty()) {
    ZPoly r = zp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return zp_monic(a, p);
}

ZPoly zp_deriv(const ZPoly& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul_mod(a[i], i % p, p);
  zp_trim(r);
  return r;
}

std::uint64_t zp_eval(const ZPoly& a, std::uint64_t x, std::uint64_t p) {
  std::uint64_t r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = add_mod(mul_mod(r, x, p), a[i] % p, p);
  return r;
}

ZPoly zp_powmod_poly(const ZPoly& a, std::uint64_t e, const ZPoly& m, std::uint64_t p) {
  ZPoly r{1};
  ZPoly base = zp_mod(a, m, p);
  while (e) {
    if (e & 1) r = zp_mod(zp_mul(r, base, p), m, p);
    base = zp_mod(zp_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t zp_resultant(ZPoly a, ZPoly b, std::uint64_t p) {
  if (a.empty() || b.empty()) return 0;
  std::uint64_t res = 1;
  while (true) {
    if (zp_deg(b) == 0) {
      res = mul_mod(res, pow_mod(b[0], zp_deg(a), p), p);
      return res;
    }
    if (zp_deg(a) < zp_deg(b)) {
      if ((static_cast<std::uint64_t>(zp_deg(a)) & 1) && (static_cast<std::uint64_t>(zp_deg(b)) & 1)) {
        res = p - res;
        if (res == p) res = 0;
      }
      std::swap(a, b);
    }
    ZPoly r = zp_mod(a, b, p);
    if (r.empty()) return 0;
    int da = zp_deg(a), db = zp_deg(b), dr = zp_deg(r);
    res = mul_mod(res, pow_mod(b.back(), da - dr, p), p);
    if ((static_cast<std::uint64_t>(da) & 1) && (static_cast<std::uint64_t>(db) & 1)) {
      res = p - res;
      if (res == p) res = 0;
    }
    a = std::move(b);
    b = std::move(r);
  }
}

namespace {

// Distinct degree factorization of monic squarefree f: pairs (product, degree).
std::vector<std::pair<ZPoly, int>> zp_ddf(const ZPoly& f, std::uint64_t p) {
  std::vector<std::pair<ZPoly, int>> out;
  ZPoly rest = f;
  ZPoly x{0, 1};
  ZPoly h = zp_mod(x, rest, p);
  int d = 0;
  while (zp_deg(rest) > 0) {
    ++d;
    if (2 * d > zp_deg(rest)) {
      out.emplace_back(rest, zp_deg(rest));
      break;
    }
    h = zp_powmod_poly(h, p, rest, p);
    ZPoly g = zp_gcd(zp_sub(h, x, p), rest, p);
    if (zp_deg(g) > 0) {
      out.emplace_back(g, d);
      ZPoly q;
      zp_divmod(rest, g, p, &q, nullptr);
      rest = q;
      h = zp_mod(h, rest, p);
    }
  }
  return out;
}

// Cantor-Zassenhaus split of a monic squarefree product of degree-d irreducibles.
void zp_edf(const ZPoly& f, int d, std::uint64_t p, Rng& rng, std::vector<ZPoly>& out) {
  if (zp_deg(f) == d) {
    out.push_back(f);
    return;
  }
  // p is odd for every engine prime.
  while (true) {
    ZPoly a(zp_deg(f), 0);
    for (auto& c : a) c = rng.next_u64() % p;
    a.push_back(1);
    // e = (p^d - 1) / 2 computed as repeated powering: a^((p-1)/2 * (1+p+...+p^(d-1)))
    ZPoly b = a;
    for (int i = 1; i < d; ++i) b = zp_mod(zp_mul(zp_powmod_poly(b, p, f, p), a, p), f, p);
    b = zp_powmod_poly(b, (p - 1) / 2, f, p);
    ZPoly g = zp_gcd(zp_sub(b, ZPoly{1}, p), f, p);
    if (zp_deg(g) > 0 && zp_deg(g) < zp_deg(f)) {
      ZPoly q;
      zp_divmod(f, g, p, &q, nullptr);
      zp_edf(g, d, p, rng, out);
      zp_edf(q, d, p, rng, out);
      return;
    }
  }
}

}  // namespace

ZpFactorization zp_factor(const ZPoly& f, std::uint64_t p, Rng& rng) {
  require(!f.empty(), "factoring the zero polynomial mod p");
  ZpFactorization out;
  out.unit = f.back();
  ZPoly rest = zp_monic(f, p);
  if (zp_deg(rest) == 0) return out;
  // p exceeds every degree we ever pass in, so rest is separable iff its
  // squarefree part is rest itself; the squarefree part carries each distinct
  // irreducible exactly once.
  ZPoly der = zp_deriv(rest, p);
  ensure(!der.empty(), "unexpected inseparable polynomial mod p");
  ZPoly g = zp_gcd(rest, der, p);
  ZPoly sqfree;
  zp_divmod(rest, g, p, &sqfree, nullptr);
  for (const auto& [prod, d] : zp_ddf(sqfree, p)) {
    std::vector<ZPoly> irr;
    zp_edf(prod, d, p, rng, irr);
    std::sort(irr.begin(), irr.end());
    for (auto& fac : irr) {
      int m = 0;
      ZPoly cur = rest;
      while (true) {
        ZPoly q, r;
        zp_divmod(cur, fac, p, &q, &r);
        if (!r.empty()) break;
        ++m;
        cur = q;
      }
      out.factors.emplace_back(fac, m);
    }
  }
  ZPoly check{1};
  for (const auto& [fac, m] : out.factors) {
    for (int i = 0; i < m; ++i) check = zp_mul(check, fac, p);
  }
  ensure(check == rest, "mod-p factorization check failed");
  return out;
}

}  // namespace kellerscope
