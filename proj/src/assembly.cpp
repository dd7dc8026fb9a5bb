#include "lamiga/assembly.hpp"

#include <array>
#include <cmath>

namespace lamiga {

namespace {

struct LayerBlocks {
  std::vector<ConstitutiveBlocks> blocks;
  std::vector<Real> rho;
};

LayerBlocks rotatedLayerBlocks(const Layup& layup, bool thicknessCoupling) {
  LayerBlocks lb;
  for (const Layer& l : layup.layers) {
    ConstitutiveBlocks b = rotateToLaminate(stiffness3D(l.lamina), l.angle);
    if (!thicknessCoupling) b = decoupleThickness(b);
    lb.blocks.push_back(b);
    lb.rho.push_back(l.lamina.rho);
  }
  return lb;
}

// Thickness-reduced coefficient tables, split so the element-level shear
// relaxation can scale only the transverse-shear part.
struct CoefficientTables {
  int maxCount = 0;
  std::vector<NucleusCoefficients> base;   // indexed s * maxCount + tau
  std::vector<NucleusCoefficients> shear;  // contributions of C55, C45, C44
};

CoefficientTables reducedCoefficients(const LayerBlocks& lb, const ThicknessIntegralTable& table,
                                      const ThicknessExpansion& exp) {
  CoefficientTables ct;
  ct.maxCount = exp.maxCount();
  ct.base.assign(ct.maxCount * ct.maxCount, NucleusCoefficients());
  ct.shear.assign(ct.maxCount * ct.maxCount, NucleusCoefficients());
  for (int s = 0; s < ct.maxCount; ++s)
    for (int tau = 0; tau < ct.maxCount; ++tau)
      for (std::size_t k = 0; k < lb.blocks.size(); ++k) {
        const NucleusCoefficients full =
            stiffnessNucleus(lb.blocks[k], table, static_cast<int>(k), tau, s);
        ConstitutiveBlocks soft = lb.blocks[k];
        soft.Cnn.topLeftCorner<2, 2>().setZero();
        const NucleusCoefficients basePart =
            stiffnessNucleus(soft, table, static_cast<int>(k), tau, s);
        NucleusCoefficients shearPart = full;
        shearPart -= basePart;
        ct.base[s * ct.maxCount + tau] += basePart;
        ct.shear[s * ct.maxCount + tau] += shearPart;
      }
  return ct;
}

// Rational basis values and physical derivatives at one quadrature point,
// flattened over the element's local control points.
struct PointBasis {
  Mat D;  // 3 x nloc: rows value, d/dx, d/dy
  Real weight = 0;
  int firstU = 0, firstV = 0;
};

PointBasis physicalBasis(const NurbsPatch& patch, const QuadPoint& q) {
  const SurfaceEval se = surfacePoint(patch, q.xi, q.eta);
  const Real detJ = se.jacobian.determinant();
  if (!(detJ > 0.0)) throw MeshError("assembly: non-positive element Jacobian");
  const Mat2 JinvT = se.jacobian.inverse().transpose();

  const int nu = static_cast<int>(se.basis.rows());
  const int nv = static_cast<int>(se.basis.cols());
  PointBasis pb;
  pb.firstU = se.firstU;
  pb.firstV = se.firstV;
  pb.weight = q.weight * detJ;
  pb.D.resize(3, nu * nv);
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j) {
      const int l = i * nv + j;
      const Vec2 grad = JinvT * Vec2(se.basisDu(i, j), se.basisDv(i, j));
      pb.D(0, l) = se.basis(i, j);
      pb.D(1, l) = grad[0];
      pb.D(2, l) = grad[1];
    }
  return pb;
}

}  // namespace

Real shearStabilizer(Real h, Real ell, Real alpha) {
  return h * h / (h * h + alpha * alpha * ell * ell);
}

Real longestElementEdge(const NurbsPatch& patch, const ElementRegion& r) {
  const Vec2 c00 = surfacePoint(patch, r.u0, r.v0).point;
  const Vec2 c10 = surfacePoint(patch, r.u1, r.v0).point;
  const Vec2 c11 = surfacePoint(patch, r.u1, r.v1).point;
  const Vec2 c01 = surfacePoint(patch, r.u0, r.v1).point;
  return std::max({(c10 - c00).norm(), (c11 - c10).norm(), (c11 - c01).norm(),
                   (c01 - c00).norm()});
}

Mat assembleStiffness(const NurbsPatch& patch, const Layup& layup, const ThicknessExpansion& exp,
                      const AssemblyOptions& options) {
  patch.validate();
  layup.validate();
  const DofMap map(patch.countU(), patch.countV(), exp);
  const ThicknessIntegralTable table = integrateThickness(layup, exp, options.gaussZ);
  const LayerBlocks lb = rotatedLayerBlocks(layup, options.thicknessCoupling);
  const CoefficientTables ct = reducedCoefficients(lb, table, exp);
  const int mc = ct.maxCount;
  const Real h = layup.thickness;

  Mat K = Mat::Zero(map.total(), map.total());
  const int nlocU = patch.knotU.degree + 1;
  const int nlocV = patch.knotV.degree + 1;
  const int nloc = nlocU * nlocV;
  const int per = map.perPoint();

  Mat L(nloc * per, nloc * per);
  Mat contrib(nloc, nloc);
  for (const ElementQuadrature& eq : quadratureRule(patch)) {
    const Real factor = options.stabilization
                            ? shearStabilizer(h, longestElementEdge(patch, eq.region),
                                              options.alpha)
                            : 1.0;
    std::vector<NucleusCoefficients> eff(mc * mc);
    for (int i = 0; i < mc * mc; ++i) {
      eff[i] = ct.base[i];
      eff[i] += ct.shear[i].scaled(factor);
    }

    L.setZero();
    int firstU = 0, firstV = 0;
    for (const QuadPoint& q : eq.points) {
      const PointBasis pb = physicalBasis(patch, q);
      firstU = pb.firstU;
      firstV = pb.firstV;
      for (int s = 0; s < mc; ++s)
        for (int tau = 0; tau < mc; ++tau) {
          const NucleusCoefficients& A = eff[s * mc + tau];
          for (int cr = 0; cr < 3; ++cr) {
            if (s >= map.tauCount(cr)) continue;
            for (int cc = 0; cc < 3; ++cc) {
              if (tau >= map.tauCount(cc)) continue;
              const Mat3& a = A.comp[cr][cc];
              if (a.isZero(0.0)) continue;
              contrib.noalias() = pb.D.transpose() * (pb.weight * a) * pb.D;
              L.block(map.localOffset(cr, s) * nloc, map.localOffset(cc, tau) * nloc, nloc,
                      nloc) += contrib;
            }
          }
        }
    }

    for (int f1 = 0; f1 < per; ++f1)
      for (int f2 = 0; f2 < per; ++f2)
        for (int i1 = 0; i1 < nloc; ++i1) {
          const int cp1 = map.pointIndex(firstU + i1 / nlocV, firstV + i1 % nlocV);
          for (int i2 = 0; i2 < nloc; ++i2) {
            const int cp2 = map.pointIndex(firstU + i2 / nlocV, firstV + i2 % nlocV);
            K(cp1 * per + f1, cp2 * per + f2) += L(f1 * nloc + i1, f2 * nloc + i2);
          }
        }
  }
  return K;
}

Mat assembleMass(const NurbsPatch& patch, const Layup& layup, const ThicknessExpansion& exp,
                 int gaussZ) {
  patch.validate();
  layup.validate();
  const DofMap map(patch.countU(), patch.countV(), exp);
  const ThicknessIntegralTable table = integrateThickness(layup, exp, gaussZ);
  // Only the densities matter here, the coupling flag is irrelevant.
  const LayerBlocks lb = rotatedLayerBlocks(layup, true);
  const int mc = exp.maxCount();

  std::vector<Vec3> inertia(mc * mc, Vec3::Zero());
  for (int s = 0; s < mc; ++s)
    for (int tau = 0; tau < mc; ++tau)
      for (std::size_t k = 0; k < lb.rho.size(); ++k)
        inertia[s * mc + tau] += massNucleus(lb.rho[k], table, static_cast<int>(k), tau, s);

  Mat M = Mat::Zero(map.total(), map.total());
  const int nlocU = patch.knotU.degree + 1;
  const int nlocV = patch.knotV.degree + 1;
  const int nloc = nlocU * nlocV;
  const int per = map.perPoint();

  Mat L(nloc * per, nloc * per);
  Mat outer(nloc, nloc);
  for (const ElementQuadrature& eq : quadratureRule(patch)) {
    L.setZero();
    int firstU = 0, firstV = 0;
    for (const QuadPoint& q : eq.points) {
      const PointBasis pb = physicalBasis(patch, q);
      firstU = pb.firstU;
      firstV = pb.firstV;
      outer.noalias() = pb.weight * (pb.D.row(0).transpose() * pb.D.row(0));
      for (int c = 0; c < 3; ++c)
        for (int s = 0; s < map.tauCount(c); ++s)
          for (int tau = 0; tau < map.tauCount(c); ++tau) {
            const Real m = inertia[s * mc + tau][c];
            if (m == 0.0) continue;
            L.block(map.localOffset(c, s) * nloc, map.localOffset(c, tau) * nloc, nloc, nloc) +=
                m * outer;
          }
    }

    for (int f1 = 0; f1 < per; ++f1)
      for (int f2 = 0; f2 < per; ++f2)
        for (int i1 = 0; i1 < nloc; ++i1) {
          const int cp1 = map.pointIndex(firstU + i1 / nlocV, firstV + i1 % nlocV);
          for (int i2 = 0; i2 < nloc; ++i2) {
            const int cp2 = map.pointIndex(firstU + i2 / nlocV, firstV + i2 % nlocV);
            M(cp1 * per + f1, cp2 * per + f2) += L(f1 * nloc + i1, f2 * nloc + i2);
          }
        }
  }
  return M;
}

Vec consistentLoad(const NurbsPatch& patch, const ThicknessExpansion& exp,
                   const std::function<Real(Real, Real)>& pressure, int gaussPerDir) {
  patch.validate();
  const DofMap map(patch.countU(), patch.countV(), exp);
  const int n = gaussPerDir > 0
                    ? gaussPerDir
                    : std::max(patch.knotU.degree, patch.knotV.degree) + 3;

  std::vector<Real> fw0(map.tauCount(CompW));
  for (int tau = 0; tau < map.tauCount(CompW); ++tau)
    fw0[tau] = exp.terms[CompW][tau].value(0.0);

  Vec P = Vec::Zero(map.total());
  for (const ElementQuadrature& eq : quadratureRule(patch, n)) {
    for (const QuadPoint& q : eq.points) {
      const SurfaceEval se = surfacePoint(patch, q.xi, q.eta);
      const Real detJ = se.jacobian.determinant();
      if (!(detJ > 0.0)) throw MeshError("consistentLoad: non-positive element Jacobian");
      const Real pw = pressure(se.point[0], se.point[1]) * q.weight * detJ;
      const int nu = static_cast<int>(se.basis.rows());
      const int nv = static_cast<int>(se.basis.cols());
      for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j) {
          const int cp = map.pointIndex(se.firstU + i, se.firstV + j);
          const Real r = se.basis(i, j) * pw;
          for (int tau = 0; tau < map.tauCount(CompW); ++tau)
            if (fw0[tau] != 0.0) P[map.dof(cp, CompW, tau)] += fw0[tau] * r;
        }
    }
  }
  return P;
}

Vec sinusoidalLoad(const NurbsPatch& patch, const ThicknessExpansion& exp, Real P0, Real a) {
  return consistentLoad(patch, exp, [P0, a](Real x, Real y) {
    return P0 * std::sin(M_PI * x / a) * std::sin(M_PI * y / a);
  });
}

Vec uniformLoad(const NurbsPatch& patch, const ThicknessExpansion& exp, Real P0) {
  return consistentLoad(patch, exp, [P0](Real, Real) { return P0; });
}

Vec ConstrainedSystem::expand(const Vec& reduced) const {
  Vec full = Vec::Zero(fullSize);
  for (std::size_t i = 0; i < freeDofs.size(); ++i) full[freeDofs[i]] = reduced[i];
  return full;
}

Mat ConstrainedSystem::expandColumns(const Mat& reduced) const {
  Mat full = Mat::Zero(fullSize, reduced.cols());
  for (std::size_t i = 0; i < freeDofs.size(); ++i) full.row(freeDofs[i]) = reduced.row(i);
  return full;
}

ConstrainedSystem applyBoundary(const GlobalSystem& system, BoundaryKind kind,
                                const NurbsPatch& patch) {
  const DofMap& map = system.dofMap;
  if (map.nU() != patch.countU() || map.nV() != patch.countV())
    throw std::invalid_argument("applyBoundary: patch does not match the assembled system");

  std::vector<char> fixed(map.total(), 0);
  auto fixFamily = [&](int point, int comp) {
    for (int tau = 0; tau < map.tauCount(comp); ++tau) fixed[map.dof(point, comp, tau)] = 1;
  };
  for (int iu = 0; iu < map.nU(); ++iu)
    for (int iv = 0; iv < map.nV(); ++iv) {
      const bool onU = (iu == 0 || iu == map.nU() - 1);
      const bool onV = (iv == 0 || iv == map.nV() - 1);
      if (!onU && !onV) continue;
      const int point = map.pointIndex(iu, iv);
      if (kind == BoundaryKind::Clamped) {
        for (int c = 0; c < 3; ++c) fixFamily(point, c);
      } else {
        if (onU) {  // physical edge x = const for the square patch
          fixFamily(point, CompV);
          fixFamily(point, CompW);
        }
        if (onV) {  // physical edge y = const
          fixFamily(point, CompU);
          fixFamily(point, CompW);
        }
      }
    }

  ConstrainedSystem out;
  out.fullSize = map.total();
  for (int i = 0; i < map.total(); ++i)
    (fixed[i] ? out.constrainedDofs : out.freeDofs).push_back(i);

  const auto& f = out.freeDofs;
  const int n = static_cast<int>(f.size());
  out.K.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.K(i, j) = system.K(f[i], f[j]);
  if (system.M.size() > 0) {
    out.M.resize(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.M(i, j) = system.M(f[i], f[j]);
  }
  if (system.P.size() > 0) {
    out.P.resize(n);
    for (int i = 0; i < n; ++i) out.P[i] = system.P[f[i]];
  }
  return out;
}

}  // namespace lamiga
