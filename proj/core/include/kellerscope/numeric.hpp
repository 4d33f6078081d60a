#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "kellerscope/puiseux.hpp"

namespace kellerscope {

using Cx = std::complex<double>;

double to_double(const Rat& r);
Cx cx_pow_int(Cx base, long e);

Cx eval_cx(const UniPoly<Rat>& p, Cx z);
Cx eval_cx(const BiPoly& f, Cx x, Cx y);

// All complex roots, Durand-Kerner. Coefficients ascending; the polynomial
// must have degree >= 1 after trailing-zero trim. Multiple roots come out as
// clustered approximations, which is fine for the well-separated fibers the
// oracles sample.
std::vector<Cx> all_roots(std::vector<Cx> ascending);
std::vector<Cx> all_roots(const UniPoly<Rat>& p);

// One complex value per tower level (bottom first): a numeric embedding of
// the coefficient tower with the pencil parameter specialized to t = t0.
struct Embedding {
  std::vector<Cx> gen;
};

std::vector<Embedding> tower_embeddings(const Tower<RatFunc>& tw, const Rat& t0);
Cx embed_elem(const TElem<RatFunc>& e, const Tower<RatFunc>& tw, const Rat& t0,
              const Embedding& emb);

// Laurent polynomial in the place parameter with complex coefficients.
struct CxSeries {
  std::map<int, Cx> terms;
};

CxSeries embed_series(const TruncSeries<RatFunc>& s, const Tower<RatFunc>& tw,
                      const Rat& t0, const Embedding& emb);
Cx eval_cx(const CxSeries& s, Cx S);

// Solves s(S) = target for the -val(s) small solutions (val(s) < 0 required):
// seeds on the dominant-term circle, then Newton on the truncated series.
std::vector<Cx> small_solutions(const CxSeries& s, Cx target);

struct FiberCheck {
  bool ok = false;
  std::string detail;  // first failure; empty when ok
  std::vector<int> clusters_per_component;
};

// Fiber clustering oracle: the numeric roots of P(R, y) = t0 and P(x, R) = t0
// must match, one to one, the sheet values predicted by the truncated place
// expansions; matched (place, embedding) clusters per horizontal component,
// divided by the component's conjugate count, must reproduce its restriction
// degree.
FiberCheck clustering_oracle(const BiPoly& p, const PencilAnalysis& an, const Rat& t0,
                             double big_radius, const Caps& caps);

}  // namespace kellerscope
