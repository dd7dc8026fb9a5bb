#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "lamiga/laminate.hpp"
#include "lamiga/types.hpp"

namespace lamiga {

/// One term F(z) of a through-thickness expansion, with analytic derivative.
struct ThicknessFunction {
  std::function<Real(Real)> value;
  std::function<Real(Real)> deriv;
  std::string label;
};

/// Per-component thickness expansions: each displacement component is
/// u_c(x,y,z) = sum_tau F^c_tau(z) * u_{c,tau}(x,y).
struct ThicknessExpansion {
  Real h = 0;
  std::array<std::vector<ThicknessFunction>, 3> terms;  // indexed by Component

  int count(int comp) const { return static_cast<int>(terms[comp].size()); }
  int maxCount() const;
  /// Unknown fields per control point (9 for the sinus-w2 preset).
  int dofsPerPoint() const;
};

/// In-plane components expanded as {1, z, sin(pi z / h)}, transverse as
/// {1, z, z^2}; h is the laminate thickness.
ThicknessExpansion sinusW2(Real h);

/// Per-layer integrals of thickness-function products:
///   value(k, ca, cb, da, db, s, tau) =
///     integral over layer k of  d^da F^{ca}_s(z) * d^db F^{cb}_tau(z) dz
/// with derivative flags da, db in {0, 1}.
class ThicknessIntegralTable {
 public:
  ThicknessIntegralTable() = default;
  ThicknessIntegralTable(int layerCount, std::array<int, 3> counts);

  Real value(int k, int ca, int cb, int da, int db, int s, int tau) const;
  Real& at(int k, int ca, int cb, int da, int db, int s, int tau);
  int layerCount() const { return layers_; }
  int count(int comp) const { return counts_[comp]; }

 private:
  int index(int k, int ca, int cb, int da, int db, int s, int tau) const;
  int layers_ = 0;
  std::array<int, 3> counts_{0, 0, 0};
  int maxCount_ = 0;
  std::vector<Real> data_;
};

/// Gauss-Legendre integration per layer.  nGaussZ >= 4; the default 12 keeps
/// sine-product integrals below 1e-13 relative error even for a single layer
/// spanning the full thickness.
ThicknessIntegralTable integrateThickness(const Layup& layup, const ThicknessExpansion& exp,
                                          int nGaussZ = 12);

}  // namespace lamiga
