#pragma once

#include <string>
#include <vector>

#include "kellerscope/param_curve.hpp"
#include "kellerscope/polymap.hpp"
#include "kellerscope/rng.hpp"

namespace kellerscope {

// Invertible affine step (u, v) -> (a u + b v + e, c u + d v + f).
struct AffineStep {
  Rat a{1}, b{0}, c{0}, d{1}, e{0}, f{0};
  Rat det() const { return a * d - b * c; }
};

// Elementary step: on_first adds h(second) to the first coordinate,
// (u, v) -> (u + h(v), v); otherwise (u, v) -> (u, v + h(u)).
struct ElementaryStep {
  bool on_first = false;
  UniPoly<Rat> h{"t"};
};

struct AutoStep {
  bool is_affine = false;
  AffineStep aff;
  ElementaryStep elem;
  static AutoStep affine(AffineStep s);
  static AutoStep elementary(ElementaryStep s);
};

// A composition of invertible steps, applied first to last.
struct AutomorphismWord {
  std::vector<AutoStep> steps;

  PolyMap to_map() const;
  ParamCurve apply(const ParamCurve& c) const;
  AutomorphismWord inverse() const;
  Rat jacobian_det() const;
  // Product of elementary-step degrees: the degree the composition must have
  // when the word is reduced.
  int expected_degree() const;
};

enum class RectifyStatus { LINE, NOT_EMBEDDING, UNDECIDED };

struct RectifyOutcome {
  RectifyStatus status = RectifyStatus::UNDECIDED;
  AutomorphismWord word;  // when LINE
  std::string reason;     // when NOT_EMBEDDING
};

// Abhyankar-Moh line rectification: degree-ordered elementary subtraction;
// LINE comes with a word mapping the curve exactly onto (xi, 0).
RectifyOutcome am_rectify(const ParamCurve& curve);

// Rectification of a graph-like curve with deg phi = 1: one elementary step
// (u, v) -> (u, v - h(u)) with h = psi o phi^{-1}.
AutomorphismWord graph_rectify(const ParamCurve& curve);

struct JvdkOutcome {
  bool ok = false;
  AutomorphismWord inverse;  // when ok
  std::string reason;        // failure tag + detail otherwise
};

// Jung-van der Kulk peeling of a plane polynomial map; on success the word
// composes to the exact inverse (verified both ways).
JvdkOutcome jvdk_invert(const PolyMap& F);

// Deterministic random tame automorphism: alternating affine/elementary word,
// at most 6 steps, coefficients of height <= 3, elementary degrees in {2,3,4}
// with the degree product capped for test-suite runtime.
AutomorphismWord random_tame(Rng& rng);

}  // namespace kellerscope
