#pragma once

#include "lamiga/laminate.hpp"
#include "lamiga/thickness.hpp"
#include "lamiga/types.hpp"

namespace lamiga {

/// Stiffness coupling between the test field (component cr, expansion index s)
/// and the trial field (component cc, expansion index tau) for one layer,
/// reduced over the thickness.  comp[cr][cc](a, b) multiplies the in-plane
/// pairing (D_a R_I)(D_b R_J) with derivative codes 0 = value, 1 = d/dx,
/// 2 = d/dy.
struct NucleusCoefficients {
  std::array<std::array<Mat3, 3>, 3> comp;

  NucleusCoefficients();
  NucleusCoefficients& operator+=(const NucleusCoefficients& o);
  NucleusCoefficients& operator-=(const NucleusCoefficients& o);
  NucleusCoefficients scaled(Real f) const;
};

/// Galerkin weak-form coefficients for layer k between trial expansion index
/// tau and test expansion index s.  Indices beyond a component's own term
/// list contribute zero slots; tau or s beyond every list throw
/// std::out_of_range.
NucleusCoefficients stiffnessNucleus(const ConstitutiveBlocks& blocks,
                                     const ThicknessIntegralTable& table, int k, int tau, int s);

/// Translational inertia coefficients (diagonal across components):
/// component c couples as rho * integral(F^c_s F^c_tau) over layer k.
Vec3 massNucleus(Real rho, const ThicknessIntegralTable& table, int k, int tau, int s);

}  // namespace lamiga
