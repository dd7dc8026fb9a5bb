#include <doctest.h>

#include <cmath>

#include "lamiga/laminate.hpp"
#include "oracles.hpp"

using namespace lamiga;

namespace {

Lamina carbonEpoxy() {
  // Typical graphite/epoxy set with independent out-of-plane constants.
  return makeLamina(132.38e9, 10.756e9, 3.606e9, 5.6537e9, 5.6537e9, 0.24, 1.0, 10.756e9, 0.24,
                    0.49);
}

// tensor invariants C_iijj and C_ijij in the (xx, yy, xy | xz, yz, zz) order
Real invariantIijj(const Mat6& C) {
  Real sum = 0;
  for (int a : {Sxx, Syy, Szz})
    for (int b : {Sxx, Syy, Szz}) sum += C(a, b);
  return sum;
}
Real invariantIjij(const Mat6& C) {
  return C(Sxx, Sxx) + C(Syy, Syy) + C(Szz, Szz) +
         2.0 * (C(Sxy, Sxy) + C(Sxz, Sxz) + C(Syz, Syz));
}

}  // namespace

TEST_CASE("makeLamina completes the out-of-plane constants") {
  const Lamina m = makeLamina(25.0, 1.0, 0.5, 0.5, 0.2, 0.25);
  CHECK(m.E3 == 1.0);
  CHECK(m.nu13 == 0.25);
  CHECK(m.nu23 == 0.25);
  CHECK(m.rho == 1.0);

  const Lamina e = carbonEpoxy();
  CHECK(e.nu23 == 0.49);
  CHECK(e.E3 == 10.756e9);
}

TEST_CASE("isotropic stiffness matches the Lamé closed form") {
  const Real E = 70e9, nu = 0.3;
  const Real G = E / (2.0 * (1.0 + nu));
  const Mat6 C = stiffness3D(makeLamina(E, E, G, G, G, nu));

  const Real lambda = E * nu / ((1.0 + nu) * (1.0 - 2.0 * nu));
  const Real diag = E * (1.0 - nu) / ((1.0 + nu) * (1.0 - 2.0 * nu));
  for (int a : {Sxx, Syy, Szz}) {
    CHECK(C(a, a) == doctest::Approx(diag).epsilon(1e-13));
    for (int b : {Sxx, Syy, Szz})
      if (a != b) CHECK(C(a, b) == doctest::Approx(lambda).epsilon(1e-13));
  }
  for (int a : {Sxy, Sxz, Syz}) CHECK(C(a, a) == doctest::Approx(G).epsilon(1e-13));
}

TEST_CASE("orthotropic stiffness inverts the compliance") {
  for (const Lamina& m : {carbonEpoxy(), makeLamina(25, 1, 0.5, 0.5, 0.2, 0.25)}) {
    const Mat6 C = stiffness3D(m);
    const Mat6 Cref = oracle::complianceStiffness(m);
    CHECK((C - Cref).norm() <= 1e-12 * Cref.norm());
  }
}

TEST_CASE("zero Poisson ratios decouple the normal directions") {
  const Mat6 C = stiffness3D(makeLamina(25, 1, 0.5, 0.5, 0.2, 0.0));
  CHECK(C(Sxx, Sxx) == doctest::Approx(25.0).epsilon(1e-14));
  CHECK(C(Syy, Syy) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(C(Szz, Szz) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(C(Sxx, Syy)) <= 1e-14);
  CHECK(std::abs(C(Sxx, Szz)) <= 1e-14);
  CHECK(std::abs(C(Syy, Szz)) <= 1e-14);
}

TEST_CASE("rotation by 90 degrees swaps the in-plane axes") {
  const Mat6 C = stiffness3D(carbonEpoxy());
  const Mat6 R = rotateToLaminate(C, M_PI / 2.0).full();
  CHECK(R(Sxx, Sxx) == doctest::Approx(C(Syy, Syy)).epsilon(1e-12));
  CHECK(R(Syy, Syy) == doctest::Approx(C(Sxx, Sxx)).epsilon(1e-12));
  CHECK(R(Sxz, Sxz) == doctest::Approx(C(Syz, Syz)).epsilon(1e-12));
  CHECK(R(Syz, Syz) == doctest::Approx(C(Sxz, Sxz)).epsilon(1e-12));
  CHECK(R(Szz, Szz) == doctest::Approx(C(Szz, Szz)).epsilon(1e-12));
  CHECK(R(Sxx, Szz) == doctest::Approx(C(Syy, Szz)).epsilon(1e-12));
}

TEST_CASE("rotation agrees with the quartic tensor transformation") {
  const Mat6 C = stiffness3D(carbonEpoxy());
  for (Real theta : {M_PI / 4.0, M_PI / 6.0, -0.3, 1.1}) {
    const Mat6 R = rotateToLaminate(C, theta).full();
    const Mat6 Rref = oracle::tensorRotate(C, theta);
    CHECK((R - Rref).norm() <= 1e-12 * C.norm());
  }
}

TEST_CASE("rotation round trip and invariants") {
  const Mat6 C = stiffness3D(carbonEpoxy());
  const Real theta = 0.61;
  const Mat6 R = rotateToLaminate(C, theta).full();
  const Mat6 back = rotateToLaminate(R, -theta).full();
  CHECK((back - C).norm() <= 1e-12 * C.norm());

  CHECK(invariantIijj(R) == doctest::Approx(invariantIijj(C)).epsilon(1e-10));
  CHECK(invariantIjij(R) == doctest::Approx(invariantIjij(C)).epsilon(1e-10));
}

TEST_CASE("partition blocks are consistent") {
  const Mat6 C = stiffness3D(carbonEpoxy());
  const ConstitutiveBlocks b = rotateToLaminate(C, 0.4);
  CHECK((b.Cnp - b.Cpn.transpose()).norm() <= 1e-12 * C.norm());
  const Mat6 full = b.full();
  CHECK((full - full.transpose()).norm() <= 1e-12 * C.norm());

  // Off-angle plies couple shear and extension.
  CHECK(std::abs(b.Cpp(Sxx, Sxy)) > 1e-6 * C.norm());
  // xz-yz coupling needs distinct transverse shear moduli.
  const Mat6 C2 = stiffness3D(makeLamina(25, 1, 0.5, 0.5, 0.2, 0.25));
  CHECK(std::abs(rotateToLaminate(C2, 0.4).Cnn(0, 1)) > 1e-9 * C2.norm());
}

TEST_CASE("cross-ply rotations keep the orthotropic zero pattern") {
  const Mat6 C = stiffness3D(carbonEpoxy());
  for (Real theta : {0.0, M_PI / 2.0, M_PI, -M_PI / 2.0}) {
    const ConstitutiveBlocks b = rotateToLaminate(C, theta);
    CHECK(std::abs(b.Cpp(Sxx, Sxy)) <= 1e-12 * C.norm());  // C16
    CHECK(std::abs(b.Cpp(Syy, Sxy)) <= 1e-12 * C.norm());  // C26
    CHECK(std::abs(b.Cpn(Sxy, 2)) <= 1e-12 * C.norm());    // C36
    CHECK(std::abs(b.Cnn(0, 1)) <= 1e-12 * C.norm());      // C45
  }
}

TEST_CASE("non positive definite constants are rejected") {
  CHECK_THROWS_AS(stiffness3D(makeLamina(25, 1, 0.5, 0.5, 0.2, 0.95)), MaterialError);
  CHECK_THROWS_AS(stiffness3D(makeLamina(-1, 1, 0.5, 0.5, 0.2, 0.25)), MaterialError);
}

TEST_CASE("decoupleThickness isolates the zz row") {
  const Mat6 C = stiffness3D(carbonEpoxy());
  for (Real theta : {0.0, 0.4, M_PI / 2.0}) {
    const ConstitutiveBlocks b = rotateToLaminate(C, theta);
    const ConstitutiveBlocks d = decoupleThickness(b);
    const Mat6 full = d.full();
    for (int i = 0; i < 5; ++i) {
      CHECK(full(i, Szz) == 0.0);
      CHECK(full(Szz, i) == 0.0);
    }
    CHECK(full(Szz, Szz) == b.Cnn(2, 2));
    CHECK((d.Cpp - b.Cpp).norm() == 0.0);
    CHECK(d.Cnn.topLeftCorner<2, 2>() == b.Cnn.topLeftCorner<2, 2>());
    // Symmetric and still positive definite.
    CHECK((full - full.transpose()).norm() <= 1e-12 * C.norm());
    CHECK(Eigen::LLT<Mat6>(full).info() == Eigen::Success);
  }
}

TEST_CASE("layup interfaces and validation") {
  const Lamina m = makeLamina(25, 1, 0.5, 0.5, 0.2, 0.25);
  const Real h = 0.25;
  const Layup lay = makeLayup(m, {0.0, M_PI / 2.0, M_PI / 2.0, 0.0}, h);
  CHECK(lay.count() == 4);
  const std::vector<Real> z = lay.interfaces();
  REQUIRE(z.size() == 5);
  CHECK(z[0] == doctest::Approx(-h / 2).epsilon(1e-15));
  CHECK(z[1] == doctest::Approx(-h / 4).epsilon(1e-15));
  CHECK(std::abs(z[2]) <= 1e-15);
  CHECK(z[4] == doctest::Approx(h / 2).epsilon(1e-15));

  Layup bad = lay;
  bad.layers[1].fraction = 0.3;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.layers[1].fraction = -0.25;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = lay;
  bad.thickness = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
