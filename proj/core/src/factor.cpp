#include "kellerscope/factor.hpp"

#include <algorithm>
#include <cstdint>

#include "kellerscope/rng.hpp"
#include "kellerscope/zp.hpp"

namespace kellerscope {

namespace {

using QP = UniPoly<Rat>;
using MPoly = std::vector<mpz_class>;  // ascending, trimmed

void mp_trim(MPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

MPoly mp_mod(const MPoly& a, const mpz_class& m) {
  MPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] % m;
    if (r[i] < 0) r[i] += m;
  }
  mp_trim(r);
  return r;
}

MPoly mp_add(const MPoly& a, const MPoly& b, const mpz_class& m) {
  MPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
    r[i] %= m;
    if (r[i] < 0) r[i] += m;
  }
  mp_trim(r);
  return r;
}

MPoly mp_sub(const MPoly& a, const MPoly& b, const mpz_class& m) {
  MPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
    r[i] %= m;
    if (r[i] < 0) r[i] += m;
  }
  mp_trim(r);
  return r;
}

MPoly mp_mul(const MPoly& a, const MPoly& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  MPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& c : r) {
    c %= m;
    if (c < 0) c += m;
  }
  mp_trim(r);
  return r;
}

// Division by a monic divisor, coefficients mod m.
void mp_divmod_monic(const MPoly& a, const MPoly& b, const mpz_class& m, MPoly* q, MPoly* r) {
  ensure(!b.empty() && b.back() == 1, "Hensel division expects a monic divisor");
  MPoly quo, rem = a;
  if (rem.size() >= b.size()) quo.assign(rem.size() - b.size() + 1, 0);
  while (rem.size() >= b.size() && !rem.empty()) {
    mpz_class f = rem.back();
    std::size_t d = rem.size() - b.size();
    quo[d] = f;
    for (std::size_t i = 0; i < b.size(); ++i) {
      rem[d + i] = (rem[d + i] - f * b[i]) % m;
      if (rem[d + i] < 0) rem[d + i] += m;
    }
    mp_trim(rem);
  }
  mp_trim(quo);
  if (q) *q = quo;
  if (r) *r = rem;
}

MPoly mp_from_zp(const ZPoly& f) {
  MPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mpz_class(static_cast<unsigned long>(f[i]));
  return r;
}

// One quadratic Hensel step: from (f = g*h, s*g + t*h = 1) mod m to mod m*m.
// h monic; deg s < deg h, deg t < deg g maintained.
void hensel_step(const MPoly& f, MPoly& g, MPoly& h, MPoly& s, MPoly& t, const mpz_class& m) {
  mpz_class m2 = m * m;
  MPoly e = mp_sub(mp_mod(f, m2), mp_mul(g, h, m2), m2);
  MPoly q, r;
  mp_divmod_monic(mp_mul(s, e, m2), h, m2, &q, &r);
  MPoly g1 = mp_add(mp_add(g, mp_mul(t, e, m2), m2), mp_mul(q, g, m2), m2);
  MPoly h1 = mp_add(h, r, m2);
  MPoly b = mp_sub(mp_add(mp_mul(s, g1, m2), mp_mul(t, h1, m2), m2), MPoly{1}, m2);
  MPoly c, d;
  mp_divmod_monic(mp_mul(s, b, m2), h1, m2, &c, &d);
  MPoly s1 = mp_sub(s, d, m2);
  MPoly t1 = mp_sub(mp_sub(t, mp_mul(t, b, m2), m2), mp_mul(c, g1, m2), m2);
  g = g1;
  h = h1;
  s = s1;
  t = t1;
}

// Bezout cofactors over Z/p for coprime (g, h): s*g + t*h = 1.
void zp_bezout(const ZPoly& g, const ZPoly& h, std::uint64_t p, ZPoly* s, ZPoly* t) {
  ZPoly r0 = g, r1 = h;
  ZPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    ZPoly q, r;
    zp_divmod(r0, r1, p, &q, &r);
    r0 = std::move(r1);
    r1 = std::move(r);
    ZPoly s2 = zp_sub(s0, zp_mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    ZPoly t2 = zp_sub(t0, zp_mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  ensure(zp_deg(r0) == 0, "Hensel Bezout basis not coprime");
  std::uint64_t inv = inv_mod(r0[0], p);
  *s = zp_scale(s0, inv, p);
  *t = zp_scale(t0, inv, p);
}

// Lift f = prod(parts) from mod p to mod target (a power of p); parts are the
// mod-p factors, the first possibly non-monic (carrying lc f), the rest monic.
// Results replace parts in place, congruent mod target.
void hensel_lift_tree(const MPoly& f, std::vector<MPoly>& parts, std::uint64_t p,
                      const mpz_class& target) {
  if (parts.size() == 1) {
    parts[0] = mp_mod(f, target);
    return;
  }
  std::size_t half = parts.size() / 2;
  MPoly A{1}, B{1};
  mpz_class pz(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i < half) {
      A = mp_mul(A, parts[i], pz);
    } else {
      B = mp_mul(B, parts[i], pz);
    }
  }
  // B is a product of monic polynomials, hence monic.
  ZPoly az(A.size()), bz(B.size());
  for (std::size_t i = 0; i < A.size(); ++i) az[i] = mpz_class(A[i] % pz).get_ui();
  for (std::size_t i = 0; i < B.size(); ++i) bz[i] = mpz_class(B[i] % pz).get_ui();
  ZPoly sz, tz;
  zp_bezout(az, bz, p, &sz, &tz);
  MPoly s = mp_from_zp(sz), t = mp_from_zp(tz);
  mpz_class m = pz;
  while (m < target) {
    hensel_step(f, A, B, s, t, m);
    m = m * m;
  }
  A = mp_mod(A, target);
  B = mp_mod(B, target);
  std::vector<MPoly> left(parts.begin(), parts.begin() + half);
  std::vector<MPoly> right(parts.begin() + half, parts.end());
  hensel_lift_tree(A, left, p, target);
  hensel_lift_tree(B, right, p, target);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    parts[i] = i < half ? left[i] : right[i - half];
  }
}

MPoly to_int_primitive(const QP& f, mpz_class* scale_num, mpz_class* scale_den) {
  mpz_class den_lcm = 1;
  for (const auto& c : f.coeffs()) den_lcm = lcm_z(den_lcm, c.den());
  MPoly F(f.coeffs().size());
  mpz_class content = 0;
  for (std::size_t i = 0; i < F.size(); ++i) {
    mpz_class v = f.coeffs()[i].num() * (den_lcm / f.coeffs()[i].den());
    F[i] = v;
    content = gcd_z(content, v);
  }
  if (content == 0) content = 1;
  if (!F.empty() && F.back() < 0) content = -content;
  for (auto& c : F) c /= content;
  mp_trim(F);
  if (scale_num) *scale_num = content;
  if (scale_den) *scale_den = den_lcm;
  return F;
}

QP from_int(const MPoly& F, const std::string& var) {
  std::vector<Rat> cs(F.size());
  for (std::size_t i = 0; i < F.size(); ++i) cs[i] = Rat(F[i]);
  return QP(var, cs);
}

bool small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Irreducible monic factors over Q of a squarefree primitive integer poly.
std::vector<QP> factor_squarefree_int(const MPoly& S, const std::string& var, const Caps& caps) {
  int n = static_cast<int>(S.size()) - 1;
  ensure(n >= 1, "squarefree factor input must be nonconstant");
  if (n == 1) return {UniPoly<Rat>(var, {Rat(S[0]) / Rat(S[1]), Rat(1)})};

  // Base prime: odd, keeps the leading coefficient, keeps squarefreeness.
  std::uint64_t p = 0;
  ZPoly Sp;
  for (std::uint64_t cand = 3; cand < 200000; cand += 2) {
    if (!small_prime(cand)) continue;
    caps.check_deadline("factorization");
    if (mpz_class(S.back() % cand) == 0) continue;
    ZPoly red(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) {
      mpz_class c = S[i] % static_cast<long>(cand);
      if (c < 0) c += static_cast<long>(cand);
      red[i] = c.get_ui();
    }
    zp_trim(red);
    ZPoly g = zp_gcd(red, zp_deriv(red, cand), cand);
    if (zp_deg(g) == 0) {
      p = cand;
      Sp = red;
      break;
    }
  }
  ensure(p != 0, "no suitable base prime for factorization");

  // Deterministic rng seeded from the reduced polynomial.
  std::uint64_t seed = p;
  for (auto c : Sp) seed = seed * 0x9E3779B97F4A7C15ull + c;
  Rng rng(seed);
  ZpFactorization zf = zp_factor(Sp, p, rng);
  if (zf.factors.size() == 1) {
    QP out = from_int(S, var);
    return {out.scaled(out.lc().inv())};
  }

  // Landau-Mignotte style height bound for factors times lc.
  mpz_class norm2 = 0;
  for (const auto& c : S) norm2 += c * c;
  mpz_class bound = 1;
  mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
  bound += 1;
  mpz_class lc = S.back();
  bound *= abs(lc);
  mpz_class two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n + 1);
  bound *= two_n;
  mpz_class target(static_cast<unsigned long>(p));
  while (target <= 2 * bound) target = target * target;

  std::vector<MPoly> parts;
  parts.reserve(zf.factors.size());
  for (const auto& [fac, mult] : zf.factors) {
    ensure(mult == 1, "squarefree input had a repeated mod-p factor");
    parts.push_back(mp_from_zp(fac));
  }
  // First part absorbs the leading coefficient.
  mpz_class pz(static_cast<unsigned long>(p));
  for (auto& c : parts[0]) {
    c = c * lc % pz;
    if (c < 0) c += pz;
  }
  mp_trim(parts[0]);
  hensel_lift_tree(S, parts, p, target);

  // Recover the monic lifted factors for recombination.
  mpz_class lc_inv;
  ensure(mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t()) != 0,
         "leading coefficient not invertible at lift modulus");
  for (auto& c : parts[0]) {
    c = c * lc_inv % target;
    if (c < 0) c += target;
  }
  mp_trim(parts[0]);

  std::vector<QP> out;
  MPoly rest = S;
  std::vector<MPoly> pool = parts;
  std::size_t subset_size = 1;
  while (pool.size() >= 2 * subset_size) {
    caps.check_deadline("factorization");
    std::vector<std::size_t> idx(subset_size);
    for (std::size_t i = 0; i < subset_size; ++i) idx[i] = i;
    bool found = false;
    while (true) {
      mpz_class rest_lc = rest.back();
      MPoly cand{rest_lc % target};
      if (cand[0] < 0) cand[0] += target;
      for (auto i : idx) cand = mp_mul(cand, pool[i], target);
      for (auto& c : cand) c = symmetric_mod(c, target);
      mpz_class content = 0;
      for (const auto& c : cand) content = gcd_z(content, c);
      if (content == 0) content = 1;
      for (auto& c : cand) c /= content;
      // Trial division over Z.
      QP trial_num = from_int(rest, var);
      QP trial_den = from_int(cand, var);
      bool ok = false;
      if (trial_den.degree() >= 1 && trial_den.degree() <= trial_num.degree()) {
        auto [q, r] = divmod(trial_num, trial_den);
        if (r.is_zero()) {
          ok = true;
          out.push_back(trial_den.scaled(trial_den.lc().inv()));
          mpz_class dummy_n, dummy_d;
          rest = to_int_primitive(q, &dummy_n, &dummy_d);
          std::vector<MPoly> next_pool;
          for (std::size_t i = 0, k = 0; i < pool.size(); ++i) {
            if (k < idx.size() && idx[k] == i) {
              ++k;
              continue;
            }
            next_pool.push_back(pool[i]);
          }
          pool = std::move(next_pool);
        }
      }
      if (ok) {
        found = true;
        break;
      }
      // Next combination.
      int pos = static_cast<int>(subset_size) - 1;
      while (pos >= 0 && idx[pos] == pool.size() - subset_size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (std::size_t i = pos + 1; i < subset_size; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++subset_size;
  }
  if (static_cast<int>(rest.size()) - 1 >= 1) {
    QP last = from_int(rest, var);
    out.push_back(last.scaled(last.lc().inv()));
  }
  return out;
}

}  // namespace

std::vector<std::pair<QP, int>> yun_squarefree(const QP& f) {
  require(!f.is_zero(), "squarefree decomposition of zero");
  std::vector<std::pair<QP, int>> out;
  if (f.degree() == 0) return out;
  QP w = f.scaled(f.lc().inv());
  QP d = w.derivative();
  QP g = gcd_poly(w, d);
  auto [c, rem_c] = divmod(w, g);
  ensure(rem_c.is_zero(), "Yun gcd division failed");
  auto [y, rem_y] = divmod(d, g);
  ensure(rem_y.is_zero(), "Yun gcd division failed");
  int i = 1;
  while (c.degree() > 0) {
    QP z = y - c.derivative();
    QP part = gcd_poly(c, z);
    if (part.degree() > 0) out.emplace_back(part, i);
    auto [cq, cr] = divmod(c, part);
    ensure(cr.is_zero(), "Yun part division failed");
    c = cq;
    auto [yq, yr] = divmod(z, part);
    ensure(yr.is_zero(), "Yun part division failed");
    y = yq;
    ++i;
  }
  return out;
}

FactorizationQ factor_rational(const QP& f, const Caps& caps) {
  require(!f.is_zero(), "factoring the zero polynomial");
  if (f.degree() > caps.factor_degree) {
    throw CapacityError("degree " + std::to_string(f.degree()) +
                        " exceeds factorization cap " + std::to_string(caps.factor_degree));
  }
  FactorizationQ out;
  out.unit = f.lc();
  if (f.degree() <= 0) return out;
  for (const auto& [part, mult] : yun_squarefree(f)) {
    mpz_class sn, sd;
    MPoly S = to_int_primitive(part, &sn, &sd);
    for (const auto& irr : factor_squarefree_int(S, f.var(), caps)) {
      out.factors.emplace_back(irr, mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const std::pair<QP, int>& a, const std::pair<QP, int>& b) {
              if (a.first.degree() != b.first.degree()) {
                return a.first.degree() < b.first.degree();
              }
              return a.first.str() < b.first.str();
            });
  QP check = QP::constant(f.var(), out.unit);
  for (const auto& [fac, mult] : out.factors) {
    for (int i = 0; i < mult; ++i) check = check * fac;
  }
  ensure(check == f, "factorization product check failed");
  return out;
}

mpz_class crt_combine(const mpz_class& r1, const mpz_class& m1, const mpz_class& r2,
                      const mpz_class& m2) {
  mpz_class inv;
  ensure(mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t()) != 0,
         "CRT moduli not coprime");
  mpz_class m = m1 * m2;
  mpz_class diff = (r2 - r1) % m2;
  if (diff < 0) diff += m2;
  mpz_class x = (r1 + m1 * (diff * inv % m2)) % m;
  if (x < 0) x += m;
  return x;
}

bool rational_reconstruct(const mpz_class& a, const mpz_class& m, Rat* out) {
  mpz_class bound;
  mpz_class half = (m - 1) / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    mpz_class t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  if (gcd_z(r1, t1) != 1) return false;
  mpz_class den = t1, num = r1;
  if (den < 0) {
    den = -den;
    num = -num;
  }
  if (gcd_z(den, m) != 1) return false;
  *out = Rat(mpq_class(num, den));
  return true;
}

mpz_class symmetric_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

}  // namespace kellerscope
