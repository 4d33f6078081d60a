#include "kellerscope/rat.hpp"

#include <cctype>
#include <ostream>

namespace kellerscope {

Rat Rat::parse(const std::string& s) {
  require(!s.empty(), "empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw UsageError("malformed rational literal '" + s + "'");
  require(q.get_den() != 0, "rational literal with zero denominator '" + s + "'");
  q.canonicalize();
  return Rat(q);
}

Rat Rat::pow(long e) const {
  if (e == 0) return Rat(1);
  require(!is_zero() || e > 0, "zero raised to a negative power");
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  mpq_class q(n, d);
  q.canonicalize();
  Rat r(q);
  return e < 0 ? r.inv() : r;
}

std::string Rat::str() const {
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

Rat gcd(const Rat& a, const Rat& b) {
  // gcd on rationals: gcd(num)/lcm(den); reduces to integer gcd for integers.
  mpz_class n = gcd_z(a.num(), b.num());
  mpz_class d = lcm_z(a.den(), b.den());
  if (n == 0) return Rat();
  mpq_class q(n, d);
  q.canonicalize();
  return Rat(q);
}

mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace kellerscope
