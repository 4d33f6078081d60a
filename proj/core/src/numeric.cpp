#include "kellerscope/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace kellerscope {

double to_double(const Rat& r) { return mpq_get_d(r.raw().get_mpq_t()); }

Cx cx_pow_int(Cx base, long e) {
  if (e < 0) return Cx(1.0) / cx_pow_int(base, -e);
  Cx r(1.0);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Cx eval_cx(const UniPoly<Rat>& p, Cx z) {
  Cx r(0.0);
  const std::vector<Rat>& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) r = r * z + Cx(to_double(c[i]));
  return r;
}

Cx eval_cx(const BiPoly& f, Cx x, Cx y) {
  Cx r(0.0);
  for (const auto& [k, c] : f.terms())
    r += Cx(to_double(c)) * cx_pow_int(x, k.first) * cx_pow_int(y, k.second);
  return r;
}

std::vector<Cx> all_roots(std::vector<Cx> a) {
  while (!a.empty() && std::abs(a.back()) == 0.0) a.pop_back();
  require(a.size() >= 2, "root finding needs degree >= 1");
  std::size_t n = a.size() - 1;
  for (std::size_t i = 0; i < n; ++i) a[i] /= a[n];
  a[n] = Cx(1.0);

  std::vector<Cx> z(n);
  const Cx seed(0.4, 0.9);
  Cx s = seed;
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = s;
    s *= seed;
  }
  for (int iter = 0; iter < 600; ++iter) {
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      Cx num(0.0);
      for (std::size_t i = n + 1; i-- > 0;) num = num * z[k] + a[i];
      Cx den(1.0);
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) den *= z[k] - z[j];
      if (std::abs(den) < 1e-300) {
        z[k] += Cx(1e-6, 2e-6);
        worst = 1.0;
        continue;
      }
      Cx dz = num / den;
      z[k] -= dz;
      worst = std::max(worst, std::abs(dz) / std::max(1.0, std::abs(z[k])));
    }
    if (worst < 1e-13) break;
  }
  return z;
}

std::vector<Cx> all_roots(const UniPoly<Rat>& p) {
  std::vector<Cx> a;
  for (const Rat& c : p.coeffs()) a.push_back(Cx(to_double(c)));
  return all_roots(std::move(a));
}

static Cx ratfunc_cx(const RatFunc& v, const Rat& t0) {
  Rat d = v.den().eval(t0);
  require(!d.is_zero(), "numeric specialization hits a pole at the sample value");
  return Cx(to_double(v.num().eval(t0) / d));
}

Cx embed_elem(const TElem<RatFunc>& e, const Rat& t0, const Embedding& emb) {
  if (!e.level()) return ratfunc_cx(e.to_base(), t0);
  std::size_t idx = static_cast<std::size_t>(e.level()->height) - 1;
  ensure(idx < emb.gen.size(), "embedding shorter than the element's tower");
  Cx g = emb.gen[idx];
  Cx r(0.0);
  std::vector<TElem<RatFunc>> cs = e.coeffs_at(e.level());
  for (std::size_t i = cs.size(); i-- > 0;) r = r * g + embed_elem(cs[i], t0, emb);
  return r;
}

std::vector<Embedding> tower_embeddings(const Tower<RatFunc>& tw, const Rat& t0) {
  if (!tw) return {Embedding{}};
  std::vector<Embedding> out;
  for (const Embedding& sub : tower_embeddings(tw->below, t0)) {
    std::vector<Cx> mp;
    mp.reserve(tw->minpoly.size());
    for (const TElem<RatFunc>& c : tw->minpoly) mp.push_back(embed_elem(c, t0, sub));
    for (Cx r : all_roots(std::move(mp))) {
      Embedding e = sub;
      e.gen.push_back(r);
      out.push_back(std::move(e));
    }
  }
  return out;
}

CxSeries embed_series(const TruncSeries<RatFunc>& s, const Tower<RatFunc>&, const Rat& t0,
                      const Embedding& emb) {
  CxSeries r;
  for (const auto& [e, c] : s.terms) r.terms[e] = embed_elem(c, t0, emb);
  return r;
}

Cx eval_cx(const CxSeries& s, Cx S) {
  Cx r(0.0);
  for (const auto& [e, c] : s.terms) r += c * cx_pow_int(S, e);
  return r;
}

std::vector<Cx> small_solutions(const CxSeries& s, Cx target) {
  ensure(!s.terms.empty(), "small_solutions of an empty series");
  int v = s.terms.begin()->first;
  ensure(v < 0, "small_solutions needs a pole");
  Cx lead = s.terms.begin()->second;
  ensure(std::abs(lead) > 0.0, "small_solutions with a vanishing leading term");

  int m = -v;  // number of small solutions
  Cx base = std::pow(lead / target, 1.0 / static_cast<double>(m));
  std::vector<Cx> out;
  for (int k = 0; k < m; ++k) {
    double ang = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(m);
    Cx S = base * Cx(std::cos(ang), std::sin(ang));
    for (int iter = 0; iter < 80; ++iter) {
      Cx f = -target, df(0.0);
      for (const auto& [e, c] : s.terms) {
        f += c * cx_pow_int(S, e);
        df += c * static_cast<double>(e) * cx_pow_int(S, e - 1);
      }
      if (std::abs(df) < 1e-300) break;
      Cx dS = f / df;
      S -= dS;
      if (std::abs(dS) < 1e-14 * std::max(1.0, std::abs(S))) break;
    }
    out.push_back(S);
  }
  return out;
}

namespace {

struct SheetPrediction {
  std::size_t place = 0;
  std::size_t emb = 0;
  Cx value;  // the solved coordinate on the fiber
};

// Predictions for the fiber {fixed coordinate = R}: every place whose series
// for that coordinate has a pole contributes -val sheets per embedding.
std::vector<SheetPrediction> fiber_predictions(const std::vector<PuiseuxPlace<RatFunc>>& places,
                                               bool fix_x, const Rat& t0, double R,
                                               std::string& err) {
  std::vector<SheetPrediction> preds;
  for (std::size_t pi = 0; pi < places.size(); ++pi) {
    const PuiseuxPlace<RatFunc>& pl = places[pi];
    auto [xs, ys] = place_xy_series(pl);
    const TruncSeries<RatFunc>& fixed = fix_x ? xs : ys;
    const TruncSeries<RatFunc>& solved = fix_x ? ys : xs;
    if (fixed.terms.empty() || fixed.terms.begin()->first >= 0) continue;
    std::vector<Embedding> embs = tower_embeddings(pl.tower, t0);
    if (static_cast<int>(embs.size()) != pl.conj) {
      std::ostringstream os;
      os << "place " << pi << ": " << embs.size() << " embeddings vs conj " << pl.conj;
      err = os.str();
      return preds;
    }
    for (std::size_t ei = 0; ei < embs.size(); ++ei) {
      CxSeries fx = embed_series(fixed, pl.tower, t0, embs[ei]);
      CxSeries sv = embed_series(solved, pl.tower, t0, embs[ei]);
      for (Cx S : small_solutions(fx, Cx(R)))
        preds.push_back({pi, ei, eval_cx(sv, S)});
    }
  }
  return preds;
}

// Matches fiber roots to predictions one to one; on success records which
// (place, embedding) pairs were hit.
bool match_fiber(const std::vector<Cx>& roots, const std::vector<SheetPrediction>& preds,
                 std::set<std::pair<std::size_t, std::size_t>>& hits, std::string& err) {
  if (roots.size() != preds.size()) {
    std::ostringstream os;
    os << "fiber has " << roots.size() << " roots but " << preds.size() << " predicted sheets";
    err = os.str();
    return false;
  }
  std::vector<bool> used(preds.size(), false);
  for (const Cx& r : roots) {
    double best = 1e300;
    std::size_t bi = preds.size();
    for (std::size_t i = 0; i < preds.size(); ++i) {
      if (used[i]) continue;
      double d = std::abs(r - preds[i].value);
      if (d < best) {
        best = d;
        bi = i;
      }
    }
    double tol = 1e-3 * std::max(1.0, std::abs(r));
    if (bi == preds.size() || best > tol) {
      std::ostringstream os;
      os << "root (" << r.real() << "," << r.imag() << ") has no sheet within " << tol;
      err = os.str();
      return false;
    }
    used[bi] = true;
    hits.insert({preds[bi].place, preds[bi].emb});
  }
  return true;
}

}  // namespace

FiberCheck clustering_oracle(const BiPoly& p, const PencilAnalysis& an, const Rat& t0,
                             double big_radius, const Caps& caps) {
  FiberCheck fc;
  std::vector<PuiseuxPlace<RatFunc>> places = an.places;
  for (PuiseuxPlace<RatFunc>& pl : places)
    if (!pl.exact) extend_place(pl, pl.known_upto + 24, caps);

  std::set<std::pair<std::size_t, std::size_t>> hits;
  for (bool fix_x : {true, false}) {
    std::string err;
    std::vector<SheetPrediction> preds = fiber_predictions(places, fix_x, t0, big_radius, err);
    if (!err.empty()) {
      fc.detail = err;
      return fc;
    }
    Rat R(static_cast<long>(big_radius));
    UniPoly<Rat> fiber = fix_x ? p.eval_x(R) : p.eval_y(R);
    fiber.set_coeff(0, fiber.coeff(0) - t0);
    std::vector<Cx> roots;
    if (fiber.degree() >= 1) roots = all_roots(fiber);
    if (!match_fiber(roots, preds, hits, err)) {
      fc.detail = (fix_x ? std::string("x-fiber: ") : std::string("y-fiber: ")) + err;
      return fc;
    }
  }

  for (const HorizontalComponent& hc : an.components) {
    int matched = 0;
    for (int pi : hc.places) {
      const PuiseuxPlace<RatFunc>& pl = places[static_cast<std::size_t>(pi)];
      for (int ei = 0; ei < pl.conj; ++ei)
        if (hits.count({static_cast<std::size_t>(pi), static_cast<std::size_t>(ei)})) ++matched;
    }
    ensure(matched % hc.conjugates == 0, "cluster count not divisible by the conjugate count");
    fc.clusters_per_component.push_back(matched / hc.conjugates);
  }
  for (std::size_t i = 0; i < an.components.size(); ++i) {
    if (fc.clusters_per_component[i] != an.components[i].restriction_degree) {
      std::ostringstream os;
      os << "component " << i << ": " << fc.clusters_per_component[i]
         << " clusters vs restriction degree " << an.components[i].restriction_degree;
      fc.detail = os.str();
      return fc;
    }
  }
  fc.ok = true;
  return fc;
}

}  // namespace kellerscope
