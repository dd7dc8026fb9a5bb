#pragma once

#include "lamiga/knot_vector.hpp"
#include "lamiga/types.hpp"

namespace lamiga {

enum class Direction { U, V };

/// Planar tensor-product NURBS patch.  Control grids are indexed (iu, iv):
/// rows follow knotU, columns knotV.
struct NurbsPatch {
  KnotVector knotU, knotV;
  Mat pointsX, pointsY, weights;

  int countU() const { return knotU.basisCount(); }
  int countV() const { return knotV.basisCount(); }

  /// Knot vectors valid, grid dimensions consistent, weights positive.
  void validate() const;
};

/// Rational basis window and geometry at one parametric point.
struct SurfaceEval {
  Vec2 point;
  Mat2 jacobian;  // d(x,y)/d(xi,eta), column j = derivative w.r.t. parameter j
  int firstU = 0, firstV = 0;
  Mat basis;    // (pU+1) x (pV+1) rational values
  Mat basisDu;  // d/dxi
  Mat basisDv;  // d/deta
};

SurfaceEval surfacePoint(const NurbsPatch& patch, Real xi, Real eta);

/// Boehm single-knot insertion at xiNew (strictly inside the parameter range).
/// Geometry and weights are preserved exactly; the basis count in `dir` grows
/// by one.  Throws RefinementError if the resulting multiplicity would exceed
/// the degree.
NurbsPatch insertKnot(const NurbsPatch& patch, Direction dir, Real xiNew);

/// Degree elevation in one direction.  Supported for directions without
/// interior knots (single-span / Bezier form); multi-span elevation would
/// require exact knot removal, which nothing here needs.  Geometry is
/// preserved exactly.
NurbsPatch elevateDegree(const NurbsPatch& patch, Direction dir, int times);

/// Insert uniformly spaced knots until each direction has the requested
/// number of nonempty spans (existing interior knots must be a subset).
NurbsPatch refineToSpans(const NurbsPatch& patch, int spansU, int spansV);

/// [0,a]^2 B-spline patch of the given degree with nel x nel spans, unit
/// weights, control points at scaled Greville abscissae.  The parametric map
/// is exactly affine: (xi, eta) -> (a xi, a eta).
NurbsPatch makeSquarePatch(Real a, int degree, int nel);

/// Exact rational biquadratic disk of radius 0.5 centred at the origin
/// (single span per direction; 3x3 control net; boundary consists of four
/// 90-degree circular arcs).
NurbsPatch makeCirclePatch();

}  // namespace lamiga
