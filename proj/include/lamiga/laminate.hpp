#pragma once

#include <optional>
#include <vector>

#include "lamiga/types.hpp"

namespace lamiga {

/// Orthotropic lamina in its material axes (1 = fiber, 2 = in-plane
/// transverse, 3 = thickness).
struct Lamina {
  Real E1 = 0, E2 = 0, E3 = 0;
  Real G12 = 0, G13 = 0, G23 = 0;
  Real nu12 = 0, nu13 = 0, nu23 = 0;
  Real rho = 1;
};

/// Builds a lamina, completing the out-of-plane constants that plate papers
/// usually omit: E3 = E2, nu13 = nu12, nu23 = nu12 unless overridden.
Lamina makeLamina(Real E1, Real E2, Real G12, Real G13, Real G23, Real nu12, Real rho = 1,
                  std::optional<Real> E3 = std::nullopt, std::optional<Real> nu13 = std::nullopt,
                  std::optional<Real> nu23 = std::nullopt);

/// 3D orthotropic stiffness in material axes, rows/columns ordered
/// (xx, yy, xy | xz, yz, zz).  Entry names follow tensor convention, e.g. the
/// zz-diagonal is C33 and sits at index (5,5).  Throws MaterialError if the
/// constants do not give a positive definite matrix.
Mat6 stiffness3D(const Lamina& lamina);

/// In-plane / transverse partition of a laminate-axes stiffness:
///   sigma_p = Cpp e_p + Cpn e_n,   sigma_n = Cnp e_p + Cnn e_n
/// with e_p = (e_xx, e_yy, g_xy), e_n = (g_xz, g_yz, e_zz).
struct ConstitutiveBlocks {
  Mat3 Cpp, Cpn, Cnp, Cnn;
  Mat6 full() const;
};

/// Rotates a material-axes stiffness by the ply angle theta (radians,
/// fiber direction measured from the laminate x-axis) and partitions it.
ConstitutiveBlocks rotateToLaminate(const Mat6& C, Real theta);

/// Effective law with the thickness stress decoupled: every entry tying e_zz
/// to another component is zeroed, only the zz-diagonal survives in that row.
/// The benchmark tables are produced with this treatment.
ConstitutiveBlocks decoupleThickness(ConstitutiveBlocks blocks);

struct Layer {
  Lamina lamina;
  Real angle = 0;     // radians
  Real fraction = 0;  // share of total thickness
};

/// Layer stack, bottom to top.  Fractions must sum to 1.
struct Layup {
  std::vector<Layer> layers;
  Real thickness = 0;

  int count() const { return static_cast<int>(layers.size()); }
  /// z-coordinates of the layer interfaces, -h/2 ... h/2, size count()+1.
  std::vector<Real> interfaces() const;
  void validate() const;
};

/// Equal-thickness stack of one material at the given ply angles (radians).
Layup makeLayup(const Lamina& lamina, const std::vector<Real>& angles, Real thickness);

}  // namespace lamiga
