#pragma once

#include <string>

#include "kellerscope/bipoly.hpp"
#include "kellerscope/unipoly.hpp"

namespace kellerscope {

// Polynomial parametrization xi -> (phi(xi), psi(xi)) of a plane curve in the
// target coordinates (u, v). At least one coordinate is nonconstant.
struct ParamCurve {
  UniPoly<Rat> phi{"xi"};
  UniPoly<Rat> psi{"xi"};
};

ParamCurve make_param_curve(UniPoly<Rat> phi, UniPoly<Rat> psi);

// Degree with the constant convention of the degree-ratio certificate:
// constants (including 0) have degree 0.
int param_deg(const UniPoly<Rat>& p);

// Primitive integer-coefficient scaling with the sign fixed so the highest
// power of v present has a positive coefficient (highest power of u when v is
// absent); the canonical form used for curve equality everywhere.
BiPoly canonical_curve(const BiPoly& f);

// Square-free primitive generator of the image's ideal: the resultant in xi
// of (u - phi, v - psi), canonicalized.
BiPoly implicitize(const ParamCurve& c);

// Reparametrizes by a degree-1 coordinate when one exists (making it exactly
// xi), otherwise scales xi to make the lowest-degree nonconstant coordinate
// monic when its leading coefficient is a rational d-th power.
ParamCurve normalize_param(const ParamCurve& c);

bool same_curve(const ParamCurve& a, const ParamCurve& b);

std::string param_str(const ParamCurve& c);

}  // namespace kellerscope
