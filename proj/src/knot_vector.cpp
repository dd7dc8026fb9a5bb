#include "lamiga/knot_vector.hpp"

#include <algorithm>
#include <cmath>

namespace lamiga {

int KnotVector::multiplicity(Real xi) const {
  return static_cast<int>(std::count(knots.begin(), knots.end(), xi));
}

int KnotVector::spanCount() const {
  int n = 0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i)
    if (knots[i + 1] > knots[i]) ++n;
  return n;
}

void KnotVector::validate() const {
  if (degree < 1) throw std::invalid_argument("knot vector: degree must be >= 1");
  const int n = basisCount();
  if (n < degree + 1)
    throw std::invalid_argument("knot vector: needs at least degree+1 basis functions");
  if (!std::is_sorted(knots.begin(), knots.end()))
    throw std::invalid_argument("knot vector: knots must be non-decreasing");
  if (knots.front() == knots.back())
    throw std::invalid_argument("knot vector: zero parametric range");
  if (multiplicity(knots.front()) != degree + 1 || multiplicity(knots.back()) != degree + 1)
    throw std::invalid_argument("knot vector: not open (end multiplicity != degree+1)");
  // interior multiplicities
  std::size_t i = degree + 1;
  while (i + degree + 1 < knots.size()) {
    std::size_t j = i;
    while (j + degree + 1 < knots.size() && knots[j + 1] == knots[i]) ++j;
    if (static_cast<int>(j - i + 1) > degree)
      throw std::invalid_argument("knot vector: interior multiplicity exceeds degree");
    i = j + 1;
  }
}

int findSpan(const KnotVector& kv, Real xi) {
  const int p = kv.degree;
  const int n = kv.basisCount();
  const auto& U = kv.knots;
  if (xi < U[p] || xi > U[n]) throw std::domain_error("findSpan: parameter outside knot range");
  if (xi >= U[n]) return n - 1;  // right-end convention: last nonempty span
  int lo = p, hi = n;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    (xi < U[mid] ? hi : lo) = mid;
  }
  return lo;
}

BasisEval evalBasis(const KnotVector& kv, Real xi) {
  const int p = kv.degree;
  const int span = findSpan(kv, xi);
  const auto& U = kv.knots;

  // ndu(r, j) = N_{span-j+r, j}(xi); inverted triangle built once, reused for
  // both values (column p) and the degree p-1 column feeding the derivatives.
  Mat ndu = Mat::Zero(p + 1, p + 1);
  std::vector<Real> left(p + 1), right(p + 1);
  ndu(0, 0) = 1.0;
  for (int j = 1; j <= p; ++j) {
    left[j] = xi - U[span + 1 - j];
    right[j] = U[span + j] - xi;
    Real saved = 0.0;
    for (int r = 0; r < j; ++r) {
      const Real den = right[r + 1] + left[j - r];
      const Real temp = ndu(r, j - 1) / den;
      ndu(r, j) = saved + right[r + 1] * temp;
      saved = left[j - r] * temp;
    }
    ndu(j, j) = saved;
  }

  BasisEval out;
  out.firstIndex = span - p;
  out.values.resize(p + 1);
  out.derivs.resize(p + 1);
  for (int r = 0; r <= p; ++r) {
    out.values[r] = ndu(r, p);
    // N'_{f,p} = p [ N_{f,p-1}/(U[f+p]-U[f]) - N_{f+1,p-1}/(U[f+p+1]-U[f+1]) ],
    // with vanishing terms at the window ends (0/0 -> 0 convention).
    const int f = span - p + r;
    Real d = 0.0;
    if (r > 0) {
      const Real den = U[f + p] - U[f];
      if (den > 0.0) d += p * ndu(r - 1, p - 1) / den;
    }
    if (r < p) {
      const Real den = U[f + p + 1] - U[f + 1];
      if (den > 0.0) d -= p * ndu(r, p - 1) / den;
    }
    out.derivs[r] = d;
  }
  return out;
}

std::vector<Real> grevilleAbscissae(const KnotVector& kv) {
  const int p = kv.degree;
  const int n = kv.basisCount();
  std::vector<Real> g(n);
  for (int i = 0; i < n; ++i) {
    Real s = 0.0;
    for (int j = 1; j <= p; ++j) s += kv.knots[i + j];
    g[i] = s / p;
  }
  return g;
}

KnotVector openUniformKnots(int degree, int spans) {
  if (degree < 1 || spans < 1) throw std::invalid_argument("openUniformKnots: bad arguments");
  KnotVector kv;
  kv.degree = degree;
  kv.knots.assign(degree + 1, 0.0);
  for (int i = 1; i < spans; ++i) kv.knots.push_back(static_cast<Real>(i) / spans);
  kv.knots.insert(kv.knots.end(), degree + 1, 1.0);
  return kv;
}

std::vector<int> nonemptySpans(const KnotVector& kv) {
  std::vector<int> spans;
  const int n = kv.basisCount();
  for (int i = kv.degree; i < n; ++i)
    if (kv.knots[i + 1] > kv.knots[i]) spans.push_back(i);
  return spans;
}

}  // namespace lamiga
