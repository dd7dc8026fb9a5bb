#pragma once

#include "lamiga/assembly.hpp"
#include "lamiga/dof_map.hpp"
#include "lamiga/laminate.hpp"
#include "lamiga/nurbs_patch.hpp"
#include "lamiga/thickness.hpp"
#include "lamiga/types.hpp"

namespace lamiga {

/// Newton inversion of the patch geometry map.  Returns the parametric
/// coordinates of a physical point; throws MeshError if the iteration leaves
/// the parameter box or fails to converge.
Vec2 paramFromPhysical(const NurbsPatch& patch, Real x, Real y);

/// Index of the layer whose closed z-interval contains z.  On an interface
/// the layer whose midsurface lies nearer the plate midplane wins; an exact
/// tie goes to the lower index.
int layerAt(const Layup& layup, Real z);

Vec3 displacementAt(const NurbsPatch& patch, const ThicknessExpansion& exp, const Vec& dofs,
                    Real xi, Real eta, Real z);

/// Strain components (xx, yy, xy, xz, yz, zz) of the expanded solution.
Vec6 strainAt(const NurbsPatch& patch, const ThicknessExpansion& exp, const Vec& dofs, Real xi,
              Real eta, Real z);

struct PointState {
  Vec3 displacement;
  Vec6 strain;
  Vec6 stress;
  int layer = 0;  // layer supplying the constitutive law
};

/// Displacement, strain and constitutive stress at a physical point.  `dofs`
/// is the full-length vector (constrained entries zero).  The stress uses the
/// element law the system was assembled with, including the shear relaxation
/// of the containing element, so pass the same options.
PointState evaluateAt(const NurbsPatch& patch, const Layup& layup, const ThicknessExpansion& exp,
                      const Vec& dofs, Real x, Real y, Real z,
                      const AssemblyOptions& options = {});

/// Scalings used by the benchmark tables.
Real nondimDeflection(Real w, Real a, Real h, Real E2, Real P0);
Real nondimInplaneStress(Real sigma, Real a, Real h, Real P0);
Real nondimShearStress(Real tau, Real a, Real h, Real P0);
Real nondimFrequency(Real omega, Real a, Real h, Real rho, Real E2);

}  // namespace lamiga
