#include "lamiga/fields.hpp"

#include <cmath>
#include <limits>

namespace lamiga {

Vec2 paramFromPhysical(const NurbsPatch& patch, Real x, Real y) {
  const Real u0 = patch.knotU.paramBegin(), u1 = patch.knotU.paramEnd();
  const Real v0 = patch.knotV.paramBegin(), v1 = patch.knotV.paramEnd();
  Vec2 target(x, y);
  Vec2 p(0.5 * (u0 + u1), 0.5 * (v0 + v1));

  const Real scale = std::max(target.norm(), Real(1));
  for (int it = 0; it < 60; ++it) {
    const SurfaceEval se = surfacePoint(patch, p[0], p[1]);
    const Vec2 r = se.point - target;
    if (r.norm() <= 1e-13 * scale) return p;
    const Real det = se.jacobian.determinant();
    if (std::abs(det) < 1e-300) throw MeshError("paramFromPhysical: singular geometry Jacobian");
    p -= se.jacobian.inverse() * r;
    p[0] = std::min(std::max(p[0], u0), u1);
    p[1] = std::min(std::max(p[1], v0), v1);
  }
  throw MeshError("paramFromPhysical: point not reached, likely outside the patch");
}

int layerAt(const Layup& layup, Real z) {
  const std::vector<Real> zi = layup.interfaces();
  const Real tol = 1e-12 * layup.thickness;
  if (z < zi.front() - tol || z > zi.back() + tol)
    throw std::domain_error("layerAt: z outside the laminate");

  int best = -1;
  Real bestMid = std::numeric_limits<Real>::infinity();
  for (int k = 0; k + 1 < static_cast<int>(zi.size()); ++k) {
    if (z < zi[k] - tol || z > zi[k + 1] + tol) continue;
    const Real mid = std::abs(0.5 * (zi[k] + zi[k + 1]));
    if (mid < bestMid - tol) {
      best = k;
      bestMid = mid;
    }
  }
  return best;
}

namespace {

// Per-component surface fields (value, d/dx, d/dy) of every expansion term at
// one parametric point.
struct SurfaceFields {
  std::array<std::vector<Vec3>, 3> f;  // [comp][tau] -> (value, ux, uy)
};

SurfaceFields surfaceFields(const NurbsPatch& patch, const ThicknessExpansion& exp,
                            const Vec& dofs, Real xi, Real eta) {
  const DofMap map(patch.countU(), patch.countV(), exp);
  if (dofs.size() != map.total())
    throw std::invalid_argument("field evaluation: DOF vector length mismatch");

  const SurfaceEval se = surfacePoint(patch, xi, eta);
  const Real det = se.jacobian.determinant();
  if (!(det > 0.0)) throw MeshError("field evaluation: non-positive geometry Jacobian");
  const Mat2 JinvT = se.jacobian.inverse().transpose();

  SurfaceFields sf;
  for (int c = 0; c < 3; ++c) sf.f[c].assign(map.tauCount(c), Vec3::Zero());
  const int nu = static_cast<int>(se.basis.rows());
  const int nv = static_cast<int>(se.basis.cols());
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j) {
      const int cp = map.pointIndex(se.firstU + i, se.firstV + j);
      const Vec2 grad = JinvT * Vec2(se.basisDu(i, j), se.basisDv(i, j));
      for (int c = 0; c < 3; ++c)
        for (int tau = 0; tau < map.tauCount(c); ++tau) {
          const Real q = dofs[map.dof(cp, c, tau)];
          sf.f[c][tau] += q * Vec3(se.basis(i, j), grad[0], grad[1]);
        }
    }
  return sf;
}

}  // namespace

Vec3 displacementAt(const NurbsPatch& patch, const ThicknessExpansion& exp, const Vec& dofs,
                    Real xi, Real eta, Real z) {
  const SurfaceFields sf = surfaceFields(patch, exp, dofs, xi, eta);
  Vec3 u = Vec3::Zero();
  for (int c = 0; c < 3; ++c)
    for (int tau = 0; tau < exp.count(c); ++tau)
      u[c] += exp.terms[c][tau].value(z) * sf.f[c][tau][0];
  return u;
}

Vec6 strainAt(const NurbsPatch& patch, const ThicknessExpansion& exp, const Vec& dofs, Real xi,
              Real eta, Real z) {
  const SurfaceFields sf = surfaceFields(patch, exp, dofs, xi, eta);
  Vec6 eps = Vec6::Zero();
  for (int tau = 0; tau < exp.count(CompU); ++tau) {
    const Real F = exp.terms[CompU][tau].value(z);
    const Real dF = exp.terms[CompU][tau].deriv(z);
    eps[Sxx] += F * sf.f[CompU][tau][1];
    eps[Sxy] += F * sf.f[CompU][tau][2];
    eps[Sxz] += dF * sf.f[CompU][tau][0];
  }
  for (int tau = 0; tau < exp.count(CompV); ++tau) {
    const Real F = exp.terms[CompV][tau].value(z);
    const Real dF = exp.terms[CompV][tau].deriv(z);
    eps[Syy] += F * sf.f[CompV][tau][2];
    eps[Sxy] += F * sf.f[CompV][tau][1];
    eps[Syz] += dF * sf.f[CompV][tau][0];
  }
  for (int tau = 0; tau < exp.count(CompW); ++tau) {
    const Real F = exp.terms[CompW][tau].value(z);
    const Real dF = exp.terms[CompW][tau].deriv(z);
    eps[Sxz] += F * sf.f[CompW][tau][1];
    eps[Syz] += F * sf.f[CompW][tau][2];
    eps[Szz] += dF * sf.f[CompW][tau][0];
  }
  return eps;
}

PointState evaluateAt(const NurbsPatch& patch, const Layup& layup, const ThicknessExpansion& exp,
                      const Vec& dofs, Real x, Real y, Real z, const AssemblyOptions& options) {
  const Vec2 p = paramFromPhysical(patch, x, y);
  PointState out;
  out.displacement = displacementAt(patch, exp, dofs, p[0], p[1], z);
  out.strain = strainAt(patch, exp, dofs, p[0], p[1], z);
  out.layer = layerAt(layup, z);
  const Layer& layer = layup.layers[out.layer];
  ConstitutiveBlocks blocks = rotateToLaminate(stiffness3D(layer.lamina), layer.angle);
  if (!options.thicknessCoupling) blocks = decoupleThickness(blocks);
  if (options.stabilization) {
    // Equilibrium was solved with relaxed shear moduli; the raw law on the
    // inflated shear strain would overshoot by 1/factor.
    const Real ell = longestElementEdge(patch, regionAt(patch, p[0], p[1]));
    blocks.Cnn.topLeftCorner<2, 2>() *= shearStabilizer(layup.thickness, ell, options.alpha);
  }
  out.stress = blocks.full() * out.strain;
  return out;
}

Real nondimDeflection(Real w, Real a, Real h, Real E2, Real P0) {
  return w * 100.0 * h * h * h * E2 / (P0 * a * a * a * a);
}

Real nondimInplaneStress(Real sigma, Real a, Real h, Real P0) {
  return sigma * h * h / (P0 * a * a);
}

Real nondimShearStress(Real tau, Real a, Real h, Real P0) {
  return tau * h / (P0 * a);
}

Real nondimFrequency(Real omega, Real a, Real h, Real rho, Real E2) {
  return omega * a * a / h * std::sqrt(rho / E2);
}

}  // namespace lamiga
