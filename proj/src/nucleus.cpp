#include "lamiga/nucleus.hpp"

namespace lamiga {

namespace {

// One additive contribution to a strain row: strain += (in-plane derivative
// `pairing` of the field) * (z-derivative `zDeriv` of the thickness term) for
// displacement component `comp`.
struct StrainTerm {
  int comp;
  int zDeriv;   // 0 value, 1 d/dz
  int pairing;  // 0 value, 1 d/dx, 2 d/dy
};

// Rows in the (xx, yy, xy | xz, yz, zz) order:
//   e_xx = u,x        e_yy = v,y        g_xy = u,y + v,x
//   g_xz = w,x + u,z  g_yz = w,y + v,z  e_zz = w,z
const std::array<std::vector<StrainTerm>, 6>& strainTerms() {
  static const std::array<std::vector<StrainTerm>, 6> t = {{
      {{CompU, 0, 1}},
      {{CompV, 0, 2}},
      {{CompU, 0, 2}, {CompV, 0, 1}},
      {{CompW, 0, 1}, {CompU, 1, 0}},
      {{CompW, 0, 2}, {CompV, 1, 0}},
      {{CompW, 1, 0}},
  }};
  return t;
}

}  // namespace

NucleusCoefficients::NucleusCoefficients() {
  for (auto& row : comp)
    for (auto& m : row) m.setZero();
}

NucleusCoefficients& NucleusCoefficients::operator+=(const NucleusCoefficients& o) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) comp[i][j] += o.comp[i][j];
  return *this;
}

NucleusCoefficients& NucleusCoefficients::operator-=(const NucleusCoefficients& o) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) comp[i][j] -= o.comp[i][j];
  return *this;
}

NucleusCoefficients NucleusCoefficients::scaled(Real f) const {
  NucleusCoefficients out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.comp[i][j] = f * comp[i][j];
  return out;
}

NucleusCoefficients stiffnessNucleus(const ConstitutiveBlocks& blocks,
                                     const ThicknessIntegralTable& table, int k, int tau, int s) {
  const int maxCount =
      std::max({table.count(CompU), table.count(CompV), table.count(CompW)});
  if (tau < 0 || tau >= maxCount || s < 0 || s >= maxCount)
    throw std::out_of_range("stiffnessNucleus: expansion index out of range");

  const Mat6 C = blocks.full();
  NucleusCoefficients out;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      const Real cab = C(a, b);
      if (cab == 0.0) continue;
      for (const auto& ta : strainTerms()[a])
        for (const auto& tb : strainTerms()[b]) {
          if (s >= table.count(ta.comp) || tau >= table.count(tb.comp)) continue;
          out.comp[ta.comp][tb.comp](ta.pairing, tb.pairing) +=
              cab * table.value(k, ta.comp, tb.comp, ta.zDeriv, tb.zDeriv, s, tau);
        }
    }
  return out;
}

Vec3 massNucleus(Real rho, const ThicknessIntegralTable& table, int k, int tau, int s) {
  const int maxCount =
      std::max({table.count(CompU), table.count(CompV), table.count(CompW)});
  if (tau < 0 || tau >= maxCount || s < 0 || s >= maxCount)
    throw std::out_of_range("massNucleus: expansion index out of range");
  Vec3 d = Vec3::Zero();
  for (int c = 0; c < 3; ++c) {
    if (s >= table.count(c) || tau >= table.count(c)) continue;
    d[c] = rho * table.value(k, c, c, 0, 0, s, tau);
  }
  return d;
}

}  // namespace lamiga
