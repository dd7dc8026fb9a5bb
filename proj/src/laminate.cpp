#include "lamiga/laminate.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace lamiga {

Lamina makeLamina(Real E1, Real E2, Real G12, Real G13, Real G23, Real nu12, Real rho,
                  std::optional<Real> E3, std::optional<Real> nu13, std::optional<Real> nu23) {
  Lamina m;
  m.E1 = E1;
  m.E2 = E2;
  m.E3 = E3.value_or(E2);
  m.G12 = G12;
  m.G13 = G13;
  m.G23 = G23;
  m.nu12 = nu12;
  m.nu13 = nu13.value_or(nu12);
  m.nu23 = nu23.value_or(nu12);
  m.rho = rho;
  return m;
}

Mat6 stiffness3D(const Lamina& m) {
  if (m.E1 <= 0 || m.E2 <= 0 || m.E3 <= 0 || m.G12 <= 0 || m.G13 <= 0 || m.G23 <= 0)
    throw MaterialError("stiffness3D: moduli must be positive");
  // Reciprocity: nu_ji = nu_ij E_j / E_i.
  const Real nu21 = m.nu12 * m.E2 / m.E1;
  const Real nu31 = m.nu13 * m.E3 / m.E1;
  const Real nu32 = m.nu23 * m.E3 / m.E2;
  const Real D = 1.0 - m.nu12 * nu21 - m.nu23 * nu32 - m.nu13 * nu31 -
                 2.0 * nu21 * nu32 * m.nu13;
  if (D <= 0) throw MaterialError("stiffness3D: Poisson ratios violate positive definiteness");

  const Real C11 = m.E1 * (1.0 - m.nu23 * nu32) / D;
  const Real C12 = m.E1 * (nu21 + nu31 * m.nu23) / D;
  const Real C13 = m.E1 * (nu31 + nu21 * nu32) / D;
  const Real C22 = m.E2 * (1.0 - m.nu13 * nu31) / D;
  const Real C23 = m.E2 * (nu32 + m.nu12 * nu31) / D;
  const Real C33 = m.E3 * (1.0 - m.nu12 * nu21) / D;

  Mat6 C = Mat6::Zero();
  C(Sxx, Sxx) = C11;
  C(Syy, Syy) = C22;
  C(Szz, Szz) = C33;
  C(Sxx, Syy) = C(Syy, Sxx) = C12;
  C(Sxx, Szz) = C(Szz, Sxx) = C13;
  C(Syy, Szz) = C(Szz, Syy) = C23;
  C(Sxy, Sxy) = m.G12;
  C(Sxz, Sxz) = m.G13;
  C(Syz, Syz) = m.G23;

  Eigen::LLT<Mat6> llt(C);
  if (llt.info() != Eigen::Success) {
    std::ostringstream os;
    os << "stiffness3D: material stiffness not positive definite (E1=" << m.E1 << " E2=" << m.E2
       << " E3=" << m.E3 << " nu12=" << m.nu12 << " nu13=" << m.nu13 << " nu23=" << m.nu23 << ")";
    throw MaterialError(os.str());
  }
  return C;
}

Mat6 ConstitutiveBlocks::full() const {
  Mat6 C;
  C.topLeftCorner<3, 3>() = Cpp;
  C.topRightCorner<3, 3>() = Cpn;
  C.bottomLeftCorner<3, 3>() = Cnp;
  C.bottomRightCorner<3, 3>() = Cnn;
  return C;
}

ConstitutiveBlocks rotateToLaminate(const Mat6& C, Real theta) {
  const Real c = std::cos(theta);
  const Real s = std::sin(theta);
  // Stress transformation material -> laminate in (xx, yy, xy | xz, yz, zz)
  // order; engineering strains transform with the inverse transpose, so
  // C' = T C T^T.
  Mat6 T = Mat6::Zero();
  T(Sxx, Sxx) = c * c;
  T(Sxx, Syy) = s * s;
  T(Sxx, Sxy) = -2.0 * c * s;
  T(Syy, Sxx) = s * s;
  T(Syy, Syy) = c * c;
  T(Syy, Sxy) = 2.0 * c * s;
  T(Sxy, Sxx) = c * s;
  T(Sxy, Syy) = -c * s;
  T(Sxy, Sxy) = c * c - s * s;
  T(Sxz, Sxz) = c;
  T(Sxz, Syz) = -s;
  T(Syz, Sxz) = s;
  T(Syz, Syz) = c;
  T(Szz, Szz) = 1.0;

  const Mat6 Cr = T * C * T.transpose();
  ConstitutiveBlocks b;
  b.Cpp = Cr.topLeftCorner<3, 3>();
  b.Cpn = Cr.topRightCorner<3, 3>();
  b.Cnp = Cr.bottomLeftCorner<3, 3>();
  b.Cnn = Cr.bottomRightCorner<3, 3>();
  return b;
}

ConstitutiveBlocks decoupleThickness(ConstitutiveBlocks blocks) {
  // e_n = (g_xz, g_yz, e_zz): the zz column/row crosses Cpn, Cnp and the
  // off-diagonal of Cnn.  Cpp and the zz-diagonal stay untouched.
  blocks.Cpn.col(2).setZero();
  blocks.Cnp.row(2).setZero();
  blocks.Cnn(0, 2) = blocks.Cnn(2, 0) = 0.0;
  blocks.Cnn(1, 2) = blocks.Cnn(2, 1) = 0.0;
  return blocks;
}

std::vector<Real> Layup::interfaces() const {
  std::vector<Real> z;
  z.reserve(layers.size() + 1);
  z.push_back(-thickness / 2.0);
  Real acc = 0.0;
  for (const Layer& l : layers) {
    acc += l.fraction;
    z.push_back(-thickness / 2.0 + acc * thickness);
  }
  return z;
}

void Layup::validate() const {
  if (layers.empty()) throw std::invalid_argument("layup: needs at least one layer");
  if (thickness <= 0) throw std::invalid_argument("layup: thickness must be positive");
  Real sum = 0.0;
  for (const Layer& l : layers) {
    if (l.fraction <= 0) throw std::invalid_argument("layup: layer fractions must be positive");
    sum += l.fraction;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("layup: layer fractions must sum to 1");
}

Layup makeLayup(const Lamina& lamina, const std::vector<Real>& angles, Real thickness) {
  Layup lay;
  lay.thickness = thickness;
  const Real f = 1.0 / static_cast<Real>(angles.size());
  for (Real a : angles) lay.layers.push_back({lamina, a, f});
  lay.validate();
  return lay;
}

}  // namespace lamiga
