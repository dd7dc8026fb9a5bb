#include "lamiga/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace lamiga {

namespace {

GaussRule computeGaussLegendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton iteration on P_n from the Chebyshev-like initial guess; symmetric
  // pairs are filled together.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    Real x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    Real pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      Real p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const Real p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const Real dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const Real w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

const GaussRule& gaussLegendre(int n) {
  if (n < 1) throw std::invalid_argument("gaussLegendre: need at least one point");
  static std::map<int, GaussRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, computeGaussLegendre(n)).first;
  return it->second;
}

std::vector<ElementRegion> elementRegions(const NurbsPatch& patch) {
  std::vector<ElementRegion> regions;
  for (int su : nonemptySpans(patch.knotU))
    for (int sv : nonemptySpans(patch.knotV)) {
      ElementRegion r;
      r.spanU = su;
      r.spanV = sv;
      r.u0 = patch.knotU.knots[su];
      r.u1 = patch.knotU.knots[su + 1];
      r.v0 = patch.knotV.knots[sv];
      r.v1 = patch.knotV.knots[sv + 1];
      regions.push_back(r);
    }
  return regions;
}

ElementRegion regionAt(const NurbsPatch& patch, Real xi, Real eta) {
  ElementRegion r;
  r.spanU = findSpan(patch.knotU, xi);
  r.spanV = findSpan(patch.knotV, eta);
  r.u0 = patch.knotU.knots[r.spanU];
  r.u1 = patch.knotU.knots[r.spanU + 1];
  r.v0 = patch.knotV.knots[r.spanV];
  r.v1 = patch.knotV.knots[r.spanV + 1];
  return r;
}

std::vector<ElementQuadrature> quadratureRule(const NurbsPatch& patch, int nOverride) {
  const int nU = nOverride > 0 ? nOverride : patch.knotU.degree + 1;
  const int nV = nOverride > 0 ? nOverride : patch.knotV.degree + 1;
  const GaussRule& gu = gaussLegendre(nU);
  const GaussRule& gv = gaussLegendre(nV);

  std::vector<ElementQuadrature> out;
  for (const ElementRegion& r : elementRegions(patch)) {
    ElementQuadrature eq;
    eq.region = r;
    const Real ju = (r.u1 - r.u0) / 2.0;
    const Real jv = (r.v1 - r.v0) / 2.0;
    eq.points.reserve(nU * nV);
    for (int a = 0; a < nU; ++a)
      for (int b = 0; b < nV; ++b) {
        QuadPoint q;
        q.xi = r.u0 + ju * (gu.nodes[a] + 1.0);
        q.eta = r.v0 + jv * (gv.nodes[b] + 1.0);
        q.weight = gu.weights[a] * gv.weights[b] * ju * jv;
        eq.points.push_back(q);
      }
    out.push_back(std::move(eq));
  }
  return out;
}

}  // namespace lamiga
