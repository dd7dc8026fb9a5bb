#pragma once

#include <vector>

#include "lamiga/types.hpp"

namespace lamiga {

/// Open (clamped) knot vector of fixed degree.
struct KnotVector {
  int degree = 0;
  std::vector<Real> knots;

  int basisCount() const { return static_cast<int>(knots.size()) - degree - 1; }
  Real paramBegin() const { return knots.front(); }
  Real paramEnd() const { return knots.back(); }
  int multiplicity(Real xi) const;
  int spanCount() const;  // nonempty spans

  /// Throws std::invalid_argument unless: non-decreasing, open form (end knots
  /// repeated exactly degree+1 times), interior multiplicity <= degree, and at
  /// least degree+1 basis functions.
  void validate() const;
};

/// Nonzero-basis window at a parameter value.  values/derivs hold the
/// degree+1 consecutive functions starting at firstIndex.
struct BasisEval {
  int firstIndex = 0;
  Eigen::ArrayXd values;
  Eigen::ArrayXd derivs;
};

/// Index i of the span [knots[i], knots[i+1]) containing xi.  The right end of
/// the parameter range maps to the last nonempty span.  Throws
/// std::domain_error for xi outside [paramBegin, paramEnd].
int findSpan(const KnotVector& kv, Real xi);

/// Values and first parametric derivatives of the degree+1 basis functions
/// supported on the span containing xi (Cox-de Boor triangle).
BasisEval evalBasis(const KnotVector& kv, Real xi);

/// Greville abscissae: knot averages, one per basis function.
std::vector<Real> grevilleAbscissae(const KnotVector& kv);

/// Open uniform knot vector on [0,1] with `spans` equal nonempty spans.
KnotVector openUniformKnots(int degree, int spans);

/// Indices of nonempty spans, ascending.
std::vector<int> nonemptySpans(const KnotVector& kv);

}  // namespace lamiga
