#pragma once

#include <cstdint>
#include <vector>

#include "kellerscope/errors.hpp"
#include "kellerscope/rng.hpp"

namespace kellerscope {

// Arithmetic mod a word-sized prime p < 2^62, plus dense polynomial helpers.
// Polynomials are coefficient vectors, ascending, with no trailing zeros.

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  if (s >= p || s < a) s -= p;
  return s;
}
inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
bool is_prime_u64(std::uint64_t n);
// Deterministic sequence of primes just below 2^62, indexed from 0.
std::uint64_t nth_engine_prime(int index);

using ZPoly = std::vector<std::uint64_t>;

void zp_trim(ZPoly& f);
int zp_deg(const ZPoly& f);  // -1 for zero
ZPoly zp_add(const ZPoly& a, const ZPoly& b, std::uint64_t p);
ZPoly zp_sub(const ZPoly& a, const ZPoly& b, std::uint64_t p);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b, std::uint64_t p);
ZPoly zp_scale(const ZPoly& a, std::uint64_t c, std::uint64_t p);
// Division with remainder; divisor must be nonzero.
void zp_divmod(const ZPoly& a, const ZPoly& b, std::uint64_t p, ZPoly* q, ZPoly* r);
ZPoly zp_mod(const ZPoly& a, const ZPoly& b, std::uint64_t p);
ZPoly zp_monic(const ZPoly& a, std::uint64_t p);
ZPoly zp_gcd(ZPoly a, ZPoly b, std::uint64_t p);
ZPoly zp_deriv(const ZPoly& a, std::uint64_t p);
std::uint64_t zp_eval(const ZPoly& a, std::uint64_t x, std::uint64_t p);
// a^e mod (m, p) by square and multiply.
ZPoly zp_powmod_poly(const ZPoly& a, std::uint64_t e, const ZPoly& m, std::uint64_t p);
// Resultant of (a, b) over Z/p via the polynomial remainder sequence.
std::uint64_t zp_resultant(ZPoly a, ZPoly b, std::uint64_t p);

// Full factorization of a nonzero polynomial mod p into monic irreducibles
// with multiplicities (plus the leading unit). Deterministic given the rng.
struct ZpFactorization {
  std::uint64_t unit;
  std::vector<std::pair<ZPoly, int>> factors;
};
ZpFactorization zp_factor(const ZPoly& f, std::uint64_t p, Rng& rng);

}  // namespace kellerscope
