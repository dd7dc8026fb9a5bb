#include "lamiga/nurbs_patch.hpp"

#include <array>
#include <cmath>

namespace lamiga {
namespace {

// Homogeneous planar control point (w*x, w*y, w).
using HPoint = Eigen::Vector3d;

HPoint homogeneous(const NurbsPatch& p, int iu, int iv) {
  const Real w = p.weights(iu, iv);
  return {w * p.pointsX(iu, iv), w * p.pointsY(iu, iv), w};
}

void setFromHomogeneous(NurbsPatch& p, int iu, int iv, const HPoint& h) {
  p.weights(iu, iv) = h[2];
  p.pointsX(iu, iv) = h[0] / h[2];
  p.pointsY(iu, iv) = h[1] / h[2];
}

NurbsPatch transposed(const NurbsPatch& p) {
  NurbsPatch q;
  q.knotU = p.knotV;
  q.knotV = p.knotU;
  q.pointsX = p.pointsX.transpose();
  q.pointsY = p.pointsY.transpose();
  q.weights = p.weights.transpose();
  return q;
}

// Insert one knot in the U direction of a patch already oriented so that the
// target direction is U.
NurbsPatch insertKnotU(const NurbsPatch& patch, Real u) {
  const KnotVector& kv = patch.knotU;
  const int p = kv.degree;
  if (!(u > kv.paramBegin() && u < kv.paramEnd()))
    throw RefinementError("insertKnot: parameter must lie strictly inside the knot range");
  const int s = kv.multiplicity(u);
  if (s + 1 > p) throw RefinementError("insertKnot: multiplicity would exceed degree");
  const int k = findSpan(kv, u);

  NurbsPatch out;
  out.knotU.degree = p;
  out.knotU.knots = kv.knots;
  out.knotU.knots.insert(out.knotU.knots.begin() + k + 1, u);
  out.knotV = patch.knotV;

  const int nU = patch.countU();
  const int nV = patch.countV();
  out.pointsX.resize(nU + 1, nV);
  out.pointsY.resize(nU + 1, nV);
  out.weights.resize(nU + 1, nV);

  for (int j = 0; j < nV; ++j) {
    for (int i = 0; i <= nU; ++i) {
      HPoint q;
      if (i <= k - p) {
        q = homogeneous(patch, i, j);
      } else if (i >= k - s + 1) {
        q = homogeneous(patch, i - 1, j);
      } else {
        const Real denom = kv.knots[i + p] - kv.knots[i];
        const Real alpha = (u - kv.knots[i]) / denom;
        q = alpha * homogeneous(patch, i, j) + (1.0 - alpha) * homogeneous(patch, i - 1, j);
      }
      setFromHomogeneous(out, i, j, q);
    }
  }
  return out;
}

// One Bezier degree-elevation step (p -> p+1) in the U direction; requires no
// interior knots in U.
NurbsPatch elevateOnceU(const NurbsPatch& patch) {
  const KnotVector& kv = patch.knotU;
  const int p = kv.degree;
  if (kv.spanCount() != 1)
    throw RefinementError("elevateDegree: direction has interior knots (refine after elevating)");
  const Real a = kv.paramBegin();
  const Real b = kv.paramEnd();

  NurbsPatch out;
  out.knotU.degree = p + 1;
  out.knotU.knots.assign(p + 2, a);
  out.knotU.knots.insert(out.knotU.knots.end(), p + 2, b);
  out.knotV = patch.knotV;

  const int nV = patch.countV();
  out.pointsX.resize(p + 2, nV);
  out.pointsY.resize(p + 2, nV);
  out.weights.resize(p + 2, nV);
  for (int j = 0; j < nV; ++j) {
    for (int i = 0; i <= p + 1; ++i) {
      const Real f = static_cast<Real>(i) / (p + 1);
      HPoint q = HPoint::Zero();
      if (i > 0) q += f * homogeneous(patch, i - 1, j);
      if (i <= p) q += (1.0 - f) * homogeneous(patch, i, j);
      setFromHomogeneous(out, i, j, q);
    }
  }
  return out;
}

}  // namespace

void NurbsPatch::validate() const {
  knotU.validate();
  knotV.validate();
  const int nU = knotU.basisCount();
  const int nV = knotV.basisCount();
  if (pointsX.rows() != nU || pointsX.cols() != nV || pointsY.rows() != nU ||
      pointsY.cols() != nV || weights.rows() != nU || weights.cols() != nV)
    throw std::invalid_argument("patch: control grid dimensions do not match knot vectors");
  if ((weights.array() <= 0.0).any())
    throw std::invalid_argument("patch: weights must be positive");
}

SurfaceEval surfacePoint(const NurbsPatch& patch, Real xi, Real eta) {
  const BasisEval bu = evalBasis(patch.knotU, xi);
  const BasisEval bv = evalBasis(patch.knotV, eta);
  const int pu = patch.knotU.degree;
  const int pv = patch.knotV.degree;

  SurfaceEval out;
  out.firstU = bu.firstIndex;
  out.firstV = bv.firstIndex;
  out.basis.resize(pu + 1, pv + 1);
  out.basisDu.resize(pu + 1, pv + 1);
  out.basisDv.resize(pu + 1, pv + 1);

  // Weighted sums W, dW/dxi, dW/deta over the active window.
  Real W = 0.0, Wu = 0.0, Wv = 0.0;
  for (int i = 0; i <= pu; ++i)
    for (int j = 0; j <= pv; ++j) {
      const Real w = patch.weights(bu.firstIndex + i, bv.firstIndex + j);
      W += bu.values[i] * bv.values[j] * w;
      Wu += bu.derivs[i] * bv.values[j] * w;
      Wv += bu.values[i] * bv.derivs[j] * w;
    }

  out.point.setZero();
  out.jacobian.setZero();
  for (int i = 0; i <= pu; ++i)
    for (int j = 0; j <= pv; ++j) {
      const int gi = bu.firstIndex + i;
      const int gj = bv.firstIndex + j;
      const Real w = patch.weights(gi, gj);
      const Real R = bu.values[i] * bv.values[j] * w / W;
      const Real Ru = (bu.derivs[i] * bv.values[j] * w - R * Wu) / W;
      const Real Rv = (bu.values[i] * bv.derivs[j] * w - R * Wv) / W;
      out.basis(i, j) = R;
      out.basisDu(i, j) = Ru;
      out.basisDv(i, j) = Rv;
      const Vec2 P(patch.pointsX(gi, gj), patch.pointsY(gi, gj));
      out.point += R * P;
      out.jacobian.col(0) += Ru * P;
      out.jacobian.col(1) += Rv * P;
    }
  return out;
}

NurbsPatch insertKnot(const NurbsPatch& patch, Direction dir, Real xiNew) {
  if (dir == Direction::U) return insertKnotU(patch, xiNew);
  return transposed(insertKnotU(transposed(patch), xiNew));
}

NurbsPatch elevateDegree(const NurbsPatch& patch, Direction dir, int times) {
  if (times < 1) throw std::invalid_argument("elevateDegree: times must be >= 1");
  NurbsPatch out = patch;
  for (int t = 0; t < times; ++t) {
    if (dir == Direction::U)
      out = elevateOnceU(out);
    else
      out = transposed(elevateOnceU(transposed(out)));
  }
  return out;
}

NurbsPatch refineToSpans(const NurbsPatch& patch, int spansU, int spansV) {
  NurbsPatch out = patch;
  for (auto [dir, spans] : {std::pair{Direction::U, spansU}, std::pair{Direction::V, spansV}}) {
    const KnotVector& kv = (dir == Direction::U) ? out.knotU : out.knotV;
    const Real a = kv.paramBegin(), b = kv.paramEnd();
    for (int i = 1; i < spans; ++i) {
      const Real u = a + (b - a) * static_cast<Real>(i) / spans;
      const KnotVector& cur = (dir == Direction::U) ? out.knotU : out.knotV;
      if (cur.multiplicity(u) == 0) out = insertKnot(out, dir, u);
    }
  }
  return out;
}

NurbsPatch makeSquarePatch(Real a, int degree, int nel) {
  if (a <= 0.0) throw std::invalid_argument("makeSquarePatch: side must be positive");
  NurbsPatch p;
  p.knotU = openUniformKnots(degree, nel);
  p.knotV = p.knotU;
  const auto g = grevilleAbscissae(p.knotU);
  const int n = static_cast<int>(g.size());
  p.pointsX.resize(n, n);
  p.pointsY.resize(n, n);
  p.weights = Mat::Ones(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      p.pointsX(i, j) = a * g[i];
      p.pointsY(i, j) = a * g[j];
    }
  return p;
}

NurbsPatch makeCirclePatch() {
  const Real c = std::sqrt(2.0) / 4.0;  // corner coordinate magnitude
  const Real m = std::sqrt(2.0) / 2.0;  // mid-edge coordinate / arc weight
  NurbsPatch p;
  p.knotU.degree = 2;
  p.knotU.knots = {0, 0, 0, 1, 1, 1};
  p.knotV = p.knotU;
  p.pointsX.resize(3, 3);
  p.pointsY.resize(3, 3);
  p.weights.resize(3, 3);
  // v must increase with y so the map keeps a positive jacobian
  const std::array<std::array<Vec2, 3>, 3> net = {{
      {{{-c, -c}, {-m, 0.0}, {-c, c}}},
      {{{0.0, -m}, {0.0, 0.0}, {0.0, m}}},
      {{{c, -c}, {m, 0.0}, {c, c}}},
  }};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      p.pointsX(i, j) = net[i][j][0];
      p.pointsY(i, j) = net[i][j][1];
      p.weights(i, j) = ((i + j) % 2 == 1) ? m : 1.0;
    }
  return p;
}

}  // namespace lamiga
