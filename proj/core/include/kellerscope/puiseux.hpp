#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kellerscope/bipoly.hpp"
#include "kellerscope/factor_param.hpp"
#include "kellerscope/tower.hpp"

namespace kellerscope {

// Places at infinity of plane curves, expanded in Duval's rational Puiseux
// form. Each chart looks along one axis: YofX works at w = 1/x -> 0 and
// expands y; XofY works at 1/y -> 0 and expands x. A branch with y ~ c x^d
// (both coordinates unbounded) is charged to YofX when d <= 1 and to XofY
// when d > 1, so every place is produced exactly once.
enum class Chart { YofX, XofY };

// Sparse bivariate polynomial over a tower field keyed by (small-var
// exponent j, solved-var exponent k).
template <class B>
using TCurve = std::map<std::pair<int, int>, TElem<B>>;

// Continuation state of a branch that ended in the implicit-function regime:
// the transformed polynomial has a simple root Y(W) -> 0 whose series is
// computed by Newton iteration, to any requested precision.
template <class B>
struct IftState {
  TCurve<B> poly;                // B'(W, Y), simple root at the origin
  TElem<B> prefac_c{1};          // solved coord += prefac_c * W^prefac_m * Y(W)
  int prefac_m = 0;
  UniPoly<TElem<B>> yser{"W"};   // Y(W), exact mod W^prec
  int prec = 1;
  std::size_t base_terms = 0;    // series entries that precede the IFT terms
  int node = -1;                 // expansion-tree id of this leaf
};

// One place at infinity. Parametrically, with S the local parameter:
//   small coord (1/x in YofX, 1/y in XofY)  =  unit * S^cycle
//   solved coord (y in YofX, x in XofY)     =  sum of c * S^m over `series`
// `conj` counts the Galois conjugates the expansion stands for (the product
// of the minimal-polynomial degrees adjoined along the way).
template <class B>
struct PuiseuxPlace {
  Chart chart = Chart::YofX;
  int cycle = 1;
  TElem<B> unit{1};
  std::vector<std::pair<int, TElem<B>>> series;  // ascending exponents
  Tower<B> tower;
  int conj = 1;
  bool exact = false;    // series terminates; otherwise known below known_upto
  int known_upto = 0;
  bool axis = false;     // the solved coordinate is identically zero

  // Pencil bookkeeping (curves P - t over Q(t)).
  int entry_node = -1;   // expansion-tree node where t first appeared
  int entry_m = 0;       // series exponent at which t entered
  std::vector<TElem<B>> prefix;  // t-free coefficients before entry

  std::shared_ptr<IftState<B>> cont;  // deepening handle; null when exact

  Rat t_entry_exponent() const { return Rat(-entry_m, cycle); }
};

struct PuiseuxOptions {
  int min_exponent = 0;  // demand known_upto >= this for non-exact places
};

// All places at infinity of the affine curve (squarefree part is taken
// first; axis components become axis places).
std::vector<PuiseuxPlace<Rat>> places_at_infinity(const BiPoly& curve, const Caps& caps,
                                                  const PuiseuxOptions& opt = {});

// Places at infinity of the pencil curve P - t over Q(t). Every place is
// expanded at least until the parameter t enters its coefficients.
std::vector<PuiseuxPlace<RatFunc>> pencil_places(const BiPoly& p, const Caps& caps,
                                                 const PuiseuxOptions& opt = {});

// Extends a non-exact place so that all series exponents < target are known.
template <class B>
void extend_place(PuiseuxPlace<B>& pl, int target, const Caps& caps);

// Horizontal components of the divisor at infinity of the pencil P - t,
// grouped from places by (pre-entry expansion node, t-entry exponent) and
// refined by prefix conjugacy: a class whose t-free prefix generates a
// degree-f_N number field is f_N conjugate components, emitted as that many
// identical entries so that sum(restriction_degree) = sum(conj) holds.
struct HorizontalComponent {
  Rat t_entry;             // exponent at which t enters, in 1/cycle units
  int restriction_degree;  // degree of P restricted to the component
  int conjugates;          // f_N
  int conjugate_index;     // 0 .. f_N-1
  std::vector<int> places; // indexes into PencilAnalysis::places
};

struct PencilAnalysis {
  std::vector<PuiseuxPlace<RatFunc>> places;
  std::vector<HorizontalComponent> components;
  int total_places = 0;  // sum of conj over places
  bool simple = false;   // every restriction degree <= 1
};

PencilAnalysis analyze_pencil(const BiPoly& p, const Caps& caps);
bool is_simple(const BiPoly& p, const Caps& caps);

// Display strings, e.g. "x = -S^-2" / "y = S + 1/2*t*S^-1 + O(S^2)".
template <class B>
std::string place_param_small(const PuiseuxPlace<B>& pl);  // the 1/x (or 1/y) coordinate
template <class B>
std::string place_param_big(const PuiseuxPlace<B>& pl);    // the expanded coordinate

// Truncated Laurent series with a certified floor: every exponent < floor
// has its exact coefficient present (zero coefficients omitted). Terms at
// exponents >= floor are unknown.
template <class B>
struct TruncSeries {
  std::map<int, TElem<B>> terms;
  int floor = 0;
  static constexpr int kExactFloor = 1 << 28;
};

template <class B>
TruncSeries<B> ts_constant(TElem<B> c) {
  TruncSeries<B> r;
  r.floor = TruncSeries<B>::kExactFloor;
  if (!c.is_zero()) r.terms.emplace(0, std::move(c));
  return r;
}

template <class B>
int ts_valuation(const TruncSeries<B>& a) {  // exponent of the first known term
  return a.terms.empty() ? a.floor : a.terms.begin()->first;
}

template <class B>
TruncSeries<B> ts_add(const TruncSeries<B>& a, const TruncSeries<B>& b) {
  TruncSeries<B> r;
  r.floor = std::min(a.floor, b.floor);
  for (const auto& [e, c] : a.terms)
    if (e < r.floor) r.terms.emplace(e, c);
  for (const auto& [e, c] : b.terms) {
    if (e >= r.floor) continue;
    auto it = r.terms.find(e);
    if (it == r.terms.end()) {
      r.terms.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) r.terms.erase(it);
    }
  }
  return r;
}

template <class B>
TruncSeries<B> ts_mul(const TruncSeries<B>& a, const TruncSeries<B>& b) {
  TruncSeries<B> r;
  long fa = a.floor, fb = b.floor, va = ts_valuation(a), vb = ts_valuation(b);
  long f = std::min(fa + vb, fb + va);
  r.floor = static_cast<int>(std::min<long>(f, TruncSeries<B>::kExactFloor));
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      int e = ea + eb;
      if (e >= r.floor) continue;
      TElem<B> prod = ca * cb;
      if (prod.is_zero()) continue;
      auto it = r.terms.find(e);
      if (it == r.terms.end()) {
        r.terms.emplace(e, std::move(prod));
      } else {
        it->second = it->second + prod;
        if (it->second.is_zero()) r.terms.erase(it);
      }
    }
  return r;
}

enum class LimitKind { Finite, Infinite, Unknown };

template <class B>
struct SeriesLimit {
  LimitKind kind = LimitKind::Unknown;
  TElem<B> value{0};  // set when finite
};

// Limit as the parameter goes to 0. Finite needs floor > 0 (so negative
// exponents are certified absent); any known negative term means Infinite;
// otherwise more terms are needed.
template <class B>
SeriesLimit<B> ts_limit(const TruncSeries<B>& a) {
  SeriesLimit<B> r;
  for (const auto& [e, c] : a.terms) {
    if (e < 0 && !c.is_zero()) {
      r.kind = LimitKind::Infinite;
      return r;
    }
  }
  if (a.floor <= 0) {
    r.kind = LimitKind::Unknown;
    return r;
  }
  r.kind = LimitKind::Finite;
  auto it = a.terms.find(0);
  if (it != a.terms.end()) r.value = it->second;
  return r;
}

// The coordinate series of a place in its parameter S: first = small coord
// (exact), second = solved coord (floor = known_upto).
template <class B>
std::pair<TruncSeries<B>, TruncSeries<B>> place_coordinate_series(const PuiseuxPlace<B>& pl);

// Evaluates a rational-coefficient polynomial curve coordinate-wise along a
// place: arguments are the (x, y) series in the place parameter.
template <class B>
TruncSeries<B> eval_on_place(const BiPoly& f, const TruncSeries<B>& xs, const TruncSeries<B>& ys);

// x/y series of the place (chart-aware): YofX has x = unit^-1 S^-cycle,
// XofY has y = unit^-1 S^-cycle.
template <class B>
std::pair<TruncSeries<B>, TruncSeries<B>> place_xy_series(const PuiseuxPlace<B>& pl);

}  // namespace kellerscope
