#pragma once

#include <functional>
#include <vector>

#include "lamiga/dof_map.hpp"
#include "lamiga/laminate.hpp"
#include "lamiga/nucleus.hpp"
#include "lamiga/nurbs_patch.hpp"
#include "lamiga/quadrature.hpp"
#include "lamiga/thickness.hpp"
#include "lamiga/types.hpp"

namespace lamiga {

struct AssemblyOptions {
  bool stabilization = true;
  Real alpha = 0.1;  // element-size coefficient of the shear relaxation
  int gaussZ = 12;
  // Keep the full C13/C23/C36 coupling between e_zz and the in-plane
  // response.  Off applies decoupleThickness to every layer law, the
  // treatment behind the benchmark tables.
  bool thicknessCoupling = false;
};

/// Transverse-shear relaxation factor h^2 / (h^2 + alpha^2 ell^2), applied to
/// the C55, C45, C44 moduli of an element with longest physical edge ell.
Real shearStabilizer(Real h, Real ell, Real alpha);

/// ell of the relaxation: longest side of the element's physical image.
Real longestElementEdge(const NurbsPatch& patch, const ElementRegion& region);

Mat assembleStiffness(const NurbsPatch& patch, const Layup& layup, const ThicknessExpansion& exp,
                      const AssemblyOptions& options = {});

Mat assembleMass(const NurbsPatch& patch, const Layup& layup, const ThicknessExpansion& exp,
                 int gaussZ = 12);

/// Work-equivalent nodal forces of a transverse pressure p(x, y) acting on
/// the z = 0 surface.  Rows pair with the transverse-component fields through
/// their thickness-function values at z = 0 (only the constant term for the
/// sinus-w2 preset).  gaussPerDir <= 0 selects degree+3 points per direction.
Vec consistentLoad(const NurbsPatch& patch, const ThicknessExpansion& exp,
                   const std::function<Real(Real, Real)>& pressure, int gaussPerDir = 0);

/// p(x, y) = P0 sin(pi x / a) sin(pi y / a); resultant 4 P0 a^2 / pi^2 on
/// [0,a]^2.
Vec sinusoidalLoad(const NurbsPatch& patch, const ThicknessExpansion& exp, Real P0, Real a);

Vec uniformLoad(const NurbsPatch& patch, const ThicknessExpansion& exp, Real P0);

enum class BoundaryKind { SimplySupported, Clamped };

struct GlobalSystem {
  Mat K;
  Mat M;  // empty unless a mass matrix was requested
  Vec P;  // zero unless a load was applied
  DofMap dofMap;
};

/// Zero-displacement constraints by row/column elimination.
/// SimplySupported (hard support for cross-ply stacks): edges xi = const fix
/// all v- and w-fields, edges eta = const fix all u- and w-fields.  Clamped
/// fixes every field on every boundary control point.
struct ConstrainedSystem {
  std::vector<int> freeDofs;          // free -> full index
  std::vector<int> constrainedDofs;   // ascending
  Mat K, M;
  Vec P;
  int fullSize = 0;

  Vec expand(const Vec& reduced) const;
  Mat expandColumns(const Mat& reduced) const;
};

ConstrainedSystem applyBoundary(const GlobalSystem& system, BoundaryKind kind,
                                const NurbsPatch& patch);

}  // namespace lamiga
