#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "kellerscope/errors.hpp"
#include "kellerscope/rat.hpp"
#include "kellerscope/unipoly.hpp"

namespace kellerscope {

// unit * prod(factors[i].first ^ factors[i].second) == input.
// Factors are monic over Q, irreducible, deterministically ordered.
struct FactorizationQ {
  Rat unit;
  std::vector<std::pair<UniPoly<Rat>, int>> factors;
};

// Yun decomposition: monic squarefree parts with their multiplicities,
// increasing multiplicity order. input = lc * prod(part_i ^ mult_i).
std::vector<std::pair<UniPoly<Rat>, int>> yun_squarefree(const UniPoly<Rat>& f);

// Complete factorization over Q (Zassenhaus: mod-p factorization, quadratic
// Hensel lifting to a Landau-Mignotte height bound, subset recombination).
FactorizationQ factor_rational(const UniPoly<Rat>& f, const Caps& caps);

// Chinese remainder: value congruent to r1 mod m1 and r2 mod m2, in [0, m1*m2).
// m1, m2 must be coprime.
mpz_class crt_combine(const mpz_class& r1, const mpz_class& m1, const mpz_class& r2,
                      const mpz_class& m2);

// Rational reconstruction of a mod m with |num|, den <= sqrt(m/2).
// Returns false when no admissible fraction exists.
bool rational_reconstruct(const mpz_class& a, const mpz_class& m, Rat* out);

// Shift representative into the symmetric range (-m/2, m/2].
mpz_class symmetric_mod(const mpz_class& a, const mpz_class& m);

}  // namespace kellerscope
