#pragma once

#include <vector>

#include "lamiga/nurbs_patch.hpp"
#include "lamiga/types.hpp"

namespace lamiga {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  Eigen::ArrayXd nodes;
  Eigen::ArrayXd weights;
};

/// n-point rule, exact for polynomials of degree 2n-1.  Cached per n.
const GaussRule& gaussLegendre(int n);

/// One nonempty knot span in each direction.
struct ElementRegion {
  int spanU = 0, spanV = 0;
  Real u0 = 0, u1 = 0, v0 = 0, v1 = 0;
};

struct QuadPoint {
  Real xi = 0, eta = 0;
  Real weight = 0;  // Gauss weight including the span scaling, excluding |det J|
};

struct ElementQuadrature {
  ElementRegion region;
  std::vector<QuadPoint> points;
};

std::vector<ElementRegion> elementRegions(const NurbsPatch& patch);

/// Region of the nonempty span pair containing (xi, eta).
ElementRegion regionAt(const NurbsPatch& patch, Real xi, Real eta);

/// Per-element tensor Gauss rules with (degreeU+1) x (degreeV+1) points, the
/// standard full-integration choice for these bases.  Pass nOverride > 0 to
/// force a point count per direction.
std::vector<ElementQuadrature> quadratureRule(const NurbsPatch& patch, int nOverride = 0);

}  // namespace lamiga
