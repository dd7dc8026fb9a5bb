#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lamiga/knot_vector.hpp"
#include "oracles.hpp"

using namespace lamiga;

namespace {

KnotVector kv(int degree, std::vector<Real> knots) {
  KnotVector out{degree, std::move(knots)};
  out.validate();
  return out;
}

}  // namespace

TEST_CASE("findSpan on a single Bezier span") {
  const KnotVector b = kv(2, {0, 0, 0, 1, 1, 1});
  CHECK(findSpan(b, 0.0) == 2);
  CHECK(findSpan(b, 0.5) == 2);
  CHECK(findSpan(b, 1.0) == 2);  // right end closes the last span
}

TEST_CASE("findSpan with interior multiplicities") {
  // Degree 3 with a triple knot at 1/3 and singles at 1/2, 2/3.
  const KnotVector k =
      kv(3, {0, 0, 0, 0, 1.0 / 3, 1.0 / 3, 1.0 / 3, 0.5, 2.0 / 3, 1, 1, 1, 1});
  CHECK(findSpan(k, 0.4) == 6);
  CHECK(findSpan(k, 0.1) == 3);
  CHECK(findSpan(k, 0.55) == 7);
  CHECK(findSpan(k, 1.0) == 8);
  CHECK_THROWS_AS(findSpan(k, -0.01), std::domain_error);
  CHECK_THROWS_AS(findSpan(k, 1.01), std::domain_error);
}

TEST_CASE("basis values match Bernstein polynomials on one span") {
  const KnotVector b = kv(2, {0, 0, 0, 1, 1, 1});
  const BasisEval e = evalBasis(b, 0.5);
  CHECK(e.firstIndex == 0);
  CHECK(e.values[0] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(e.values[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(e.values[2] == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("interpolatory at a full-multiplicity interior knot") {
  const KnotVector k =
      kv(3, {0, 0, 0, 0, 1.0 / 3, 1.0 / 3, 1.0 / 3, 0.5, 2.0 / 3, 1, 1, 1, 1});
  const BasisEval e = evalBasis(k, 1.0 / 3);
  // C^0 point: exactly one basis function equals 1, the rest vanish.
  int ones = 0;
  for (int a = 0; a < e.values.size(); ++a) {
    if (std::abs(e.values[a] - 1.0) < 1e-14)
      ++ones;
    else
      CHECK(std::abs(e.values[a]) < 1e-14);
  }
  CHECK(ones == 1);
}

TEST_CASE("partition of unity and derivative sum at random points") {
  const KnotVector k =
      kv(3, {0, 0, 0, 0, 1.0 / 3, 1.0 / 3, 1.0 / 3, 0.5, 2.0 / 3, 1, 1, 1, 1});
  std::mt19937 rng(21u);
  std::uniform_real_distribution<Real> dist(0.0, 1.0);
  for (int trial = 0; trial < 10000; ++trial) {
    const Real xi = dist(rng);
    const BasisEval e = evalBasis(k, xi);
    CHECK(std::abs(e.values.sum() - 1.0) <= 1e-12);
    CHECK(std::abs(e.derivs.sum()) <= 1e-10);
  }
}

TEST_CASE("window values agree with the literal recursion") {
  const KnotVector k =
      kv(3, {0, 0, 0, 0, 1.0 / 3, 1.0 / 3, 1.0 / 3, 0.5, 2.0 / 3, 1, 1, 1, 1});
  for (Real xi : {0.0, 0.05, 1.0 / 3, 0.4, 0.5, 0.61, 2.0 / 3, 0.93, 1.0}) {
    const BasisEval e = evalBasis(k, xi);
    for (int a = 0; a < e.values.size(); ++a) {
      const int i = e.firstIndex + a;
      CHECK(e.values[a] ==
            doctest::Approx(oracle::naiveBasis(k.knots, i, k.degree, xi)).epsilon(1e-13));
      CHECK(e.derivs[a] ==
            doctest::Approx(oracle::naiveBasisDeriv(k.knots, i, k.degree, xi))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("derivatives agree with central differences") {
  const KnotVector k = openUniformKnots(4, 7);
  const Real step = 1e-6;
  for (Real xi : {0.11, 0.290001, 0.5, 0.731, 0.96}) {
    const BasisEval e = evalBasis(k, xi);
    for (int a = 0; a < e.values.size(); ++a) {
      const int i = e.firstIndex + a;
      const Real fd = (oracle::naiveBasis(k.knots, i, k.degree, xi + step) -
                       oracle::naiveBasis(k.knots, i, k.degree, xi - step)) /
                      (2 * step);
      CHECK(e.derivs[a] == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("open uniform constructor") {
  const KnotVector k = openUniformKnots(2, 4);
  CHECK(k.basisCount() == 6);
  CHECK(k.spanCount() == 4);
  CHECK(k.knots.size() == 9);
  CHECK(k.knots[3] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(k.multiplicity(0.0) == 3);
  CHECK(k.multiplicity(0.5) == 1);
  CHECK(k.multiplicity(0.1) == 0);

  const std::vector<Real> g = grevilleAbscissae(k);
  CHECK(g.size() == 6);
  CHECK(g.front() == doctest::Approx(0.0));
  CHECK(g.back() == doctest::Approx(1.0));
  CHECK(g[1] == doctest::Approx(0.125));
}

TEST_CASE("validate rejects malformed knot vectors") {
  KnotVector decreasing{2, {0, 0, 0, 0.6, 0.4, 1, 1, 1}};
  CHECK_THROWS_AS(decreasing.validate(), std::invalid_argument);

  KnotVector notOpen{2, {0, 0, 0.5, 1, 1, 1}};
  CHECK_THROWS_AS(notOpen.validate(), std::invalid_argument);

  KnotVector overMult{2, {0, 0, 0, 0.5, 0.5, 0.5, 1, 1, 1}};
  CHECK_THROWS_AS(overMult.validate(), std::invalid_argument);

  KnotVector tooShort{3, {0, 0, 0, 0, 1, 1, 1}};
  CHECK_THROWS_AS(tooShort.validate(), std::invalid_argument);
}
