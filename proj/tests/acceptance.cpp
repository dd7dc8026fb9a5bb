// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Expected values and tolerances are pinned here, independent of the builtin
// case registry.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lamiga/bench.hpp"
#include "lamiga/fields.hpp"
#include "lamiga/solve.hpp"
#include "oracles.hpp"

using namespace lamiga;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& text) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", id, text.c_str());
  if (!pass) ++failures;
}

Real relDev(Real computed, Real reference) {
  return std::abs(computed - reference) / std::abs(reference);
}

std::string pct(Real v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * v);
  return buf;
}

CaseResult run(const std::string& name) {
  const CaseSpec* spec = findBuiltinCase(name);
  if (!spec) throw std::runtime_error("missing builtin case " + name);
  return runCase(*spec);
}

Real value(const CaseResult& r, const std::string& quantity) {
  const QuantityValue* v = r.find(quantity);
  if (!v) throw std::runtime_error(r.name + " lacks quantity " + quantity);
  return v->computed;
}

// tracks the single worst deviation-to-tolerance ratio of a criterion
struct Worst {
  Real ratio = 0;
  Real dev = 0, tol = 0;
  std::string what;

  bool note(const std::string& what_, Real computed, Real ref, Real tol_) {
    const Real d = relDev(computed, ref);
    if (tol_ > 0 && d / tol_ > ratio) {
      ratio = d / tol_;
      dev = d;
      tol = tol_;
      what = what_;
    }
    return d <= tol_;
  }
  std::string text() const {
    return "worst " + what + " " + pct(dev) + " of " + pct(tol) + " allowed";
  }
};

bool monotoneLike(const std::vector<Real>& computed, const std::vector<Real>& printed) {
  const Real dir = printed.back() - printed.front();
  for (std::size_t i = 1; i < computed.size(); ++i) {
    const Real step = computed[i] - computed[i - 1];
    if (dir > 0 ? step < 0 : step > 0) return false;
  }
  return true;
}

void criterion1() {
  // a/h = 4 cross-ply bending: gated values on the quartic 9x9 mesh, printed
  // mesh sequences for the lower degrees, per-case runtime budget.
  const Real refW[3][3] = {{1.9207, 1.9100, 1.9058},
                           {1.9076, 1.9038, 1.9021},
                           {1.9045, 1.9020, 1.9010}};
  const Real refSxx[3][3] = {{0.6966, 0.7009, 0.7029},
                             {0.7074, 0.7063, 0.7061},
                             {0.7062, 0.7060, 0.7058}};
  const Real refSyy[3][3] = {{0.6179, 0.6221, 0.6239},
                             {0.6277, 0.6270, 0.6268},
                             {0.6268, 0.6267, 0.6266}};
  const Real refTxz[3][3] = {{0.2293, 0.2246, 0.2227},
                             {0.2210, 0.2205, 0.2202},
                             {0.2205, 0.2202, 0.2201}};
  const char* degs[3] = {"quadratic", "cubic", "quartic"};
  const char* meshes[3] = {"5x5", "7x7", "9x9"};

  bool pass = true;
  Worst worst;
  Real maxRuntime = 0;

  Real w[3][3], sxx[3][3], syy[3][3], txz[3][3];
  for (int d = 0; d < 3; ++d)
    for (int m = 0; m < 3; ++m) {
      const CaseResult r = run(std::string("table1-") + degs[d] + "-" + meshes[m]);
      w[d][m] = value(r, "wbar");
      sxx[d][m] = value(r, "sxx");
      syy[d][m] = value(r, "syy");
      txz[d][m] = value(r, "txz");
      maxRuntime = std::max(maxRuntime, r.runtimeSeconds);
    }

  pass &= worst.note("wbar", w[2][2], 1.9010, 0.005);
  pass &= worst.note("sxx", sxx[2][2], 0.7058, 0.01);
  pass &= worst.note("syy", syy[2][2], 0.6266, 0.01);
  pass &= worst.note("txz", txz[2][2], 0.2201, 0.02);

  bool monotone = true;
  for (int d = 0; d < 2; ++d) {  // quadratic and cubic, still far from converged
    monotone &= monotoneLike({w[d][0], w[d][1], w[d][2]},
                             {refW[d][0], refW[d][1], refW[d][2]});
    monotone &= monotoneLike({sxx[d][0], sxx[d][1], sxx[d][2]},
                             {refSxx[d][0], refSxx[d][1], refSxx[d][2]});
    monotone &= monotoneLike({syy[d][0], syy[d][1], syy[d][2]},
                             {refSyy[d][0], refSyy[d][1], refSyy[d][2]});
  }
  monotone &= monotoneLike({txz[0][0], txz[0][1], txz[0][2]},
                           {refTxz[0][0], refTxz[0][1], refTxz[0][2]});
  // The cubic txz row spreads only 0.36% across meshes, below the spread the
  // recovery convention controls; the per-mesh values are gated instead.
  bool txzClose = true;
  for (int m = 0; m < 3; ++m)
    txzClose &= std::abs(txz[1][m] - refTxz[1][m]) <= 0.01 * refTxz[1][m];
  pass &= monotone;
  pass &= txzClose;
  const bool fast = maxRuntime < 30.0;
  pass &= fast;

  char extra[160];
  std::snprintf(extra, sizeof extra,
                "; sequences %s; cubic txz row %s 1%%; slowest case %.1fs (budget 30s)",
                monotone ? "monotone" : "NOT monotone", txzClose ? "within" : "OUTSIDE",
                maxRuntime);
  report(1, pass, "thick-plate bending, a/h=4 cross-ply: " + worst.text() + extra);
}

void criterion2() {
  bool pass = true;
  Worst worst;
  const CaseResult r10 = run("table2-ah10-quartic");
  pass &= worst.note("a/h=10 wbar", value(r10, "wbar"), 0.7187, 0.005);
  pass &= worst.note("a/h=10 sxx", value(r10, "sxx"), 0.5594, 0.01);
  pass &= worst.note("a/h=10 txz", value(r10, "txz"), 0.2967, 0.02);
  const CaseResult r100 = run("table2-ah100-quartic");
  pass &= worst.note("a/h=100 wbar", value(r100, "wbar"), 0.4317, 0.005);
  report(2, pass, "moderately thick and thin bending: " + worst.text());
}

void criterion3() {
  const int ratios[5] = {10, 50, 100, 500, 1000};
  const Real refs[5] = {0.9217, 0.7695, 0.7646, 0.7631, 0.7630};
  bool pass = true;
  Worst worst;
  for (int i = 0; i < 5; ++i) {
    const CaseResult r = run("table3-ah" + std::to_string(ratios[i]) + "-quartic");
    pass &= worst.note("a/h=" + std::to_string(ratios[i]), value(r, "wbar"), refs[i], 0.005);
  }

  // locking control: the stabilized quadratic stays close to the cubic
  // solution even at a/h = 1000
  const Real wQuad = value(run("table3-ah1000-quadratic"), "wbar");
  const Real wCubic = value(run("table3-ah1000-cubic"), "wbar");
  const Real gap = relDev(wQuad, wCubic);
  const bool lockFree = gap <= 0.01;
  pass &= lockFree;

  report(3, pass,
         "three-layer sweep to a/h=1000: " + worst.text() +
             "; stabilized quadratic vs cubic gap " + pct(gap) + " (budget 1.00%)");
}

void criterion4() {
  bool pass = true;
  Worst worst;

  const int ratios[4] = {10, 20, 30, 40};
  const Real refs[4] = {8.3439, 9.5566, 10.2734, 10.7640};
  for (int i = 0; i < 4; ++i) {
    const CaseResult r = run("table5-e" + std::to_string(ratios[i]) + "-quartic");
    pass &= worst.note("E1/E2=" + std::to_string(ratios[i]), value(r, "omega1"), refs[i],
                       0.005);
  }

  bool monotone = true;
  for (const char* deg : {"quadratic", "cubic", "quartic"}) {
    Real prev = 0;
    for (const char* mesh : {"5x5", "7x7", "9x9"}) {
      const Real om = value(run(std::string("table4-") + deg + "-" + mesh), "omega1");
      if (om <= prev) monotone = false;
      prev = om;
    }
  }
  pass &= monotone;

  report(4, pass,
         "fundamental frequency vs modulus ratio: " + worst.text() +
             std::string("; mesh convergence ") +
             (monotone ? "monotone increasing" : "NOT monotone"));
}

void criterion5() {
  const int ratios[6] = {2, 4, 10, 20, 50, 100};
  const Real refs[6] = {5.3951, 9.2815, 15.1239, 17.6749, 18.7024, 18.8665};
  bool pass = true;
  Worst worst;
  for (int i = 0; i < 6; ++i) {
    const CaseResult r = run("table6-ah" + std::to_string(ratios[i]) + "-quartic");
    const Real tol = ratios[i] == 2 ? 0.015 : 0.01;
    pass &= worst.note("a/h=" + std::to_string(ratios[i]), value(r, "omega1"), refs[i], tol);
  }
  report(5, pass, "frequency vs side-to-thickness sweep: " + worst.text());
}

void criterion6() {
  const int thetas[4] = {0, 15, 30, 45};
  const Real refs[4][3] = {{22.6663, 30.3485, 41.7294},
                           {23.0024, 31.5752, 43.7671},
                           {23.9749, 35.2577, 44.2964},
                           {24.5253, 37.4311, 44.0796}};
  bool pass = true;
  Worst worst;
  for (int t = 0; t < 4; ++t) {
    const CaseResult r = run("table8-theta" + std::to_string(thetas[t]));
    for (int m = 0; m < 3; ++m)
      pass &= worst.note(
          "theta=" + std::to_string(thetas[t]) + " omega" + std::to_string(m + 1),
          value(r, "omega" + std::to_string(m + 1)), refs[t][m], 0.015);
  }
  report(6, pass, "clamped circular angle-ply, first three frequencies: " + worst.text());
}

void criterion7() {
  std::vector<std::string> bad;

  // partition of unity
  {
    const KnotVector kv{3, {0, 0, 0, 0, 0.2, 0.4, 0.4, 0.7, 1, 1, 1, 1}};
    kv.validate();
    std::mt19937 rng(17u);
    std::uniform_real_distribution<Real> dist(0.0, 1.0);
    Real worst = 0;
    for (int i = 0; i < 2000; ++i) {
      const BasisEval e = evalBasis(kv, dist(rng));
      worst = std::max(worst, std::abs(e.values.sum() - 1.0));
    }
    if (worst > 1e-12) bad.push_back("partition of unity");
  }

  const Real a = 1.0, h = 0.25;
  const Layup lay =
      makeLayup(makeLamina(25, 1, 0.5, 0.5, 0.2, 0.25), {0.0, M_PI / 2, M_PI / 2, 0.0}, h);
  const ThicknessExpansion exp = sinusW2(h);
  const NurbsPatch patch = makeSquarePatch(a, 2, 5);
  const DofMap map(patch.countU(), patch.countV(), exp);

  // strain recovery vs finite differences of the displacement field
  {
    std::mt19937 rng(23u);
    std::uniform_real_distribution<Real> dist(-1.0, 1.0);
    Vec d(map.total());
    for (int i = 0; i < d.size(); ++i) d[i] = dist(rng);
    const Real xi = 0.43, eta = 0.58, z = 0.03, step = 1e-6;
    auto u = [&](Real p, Real q, Real r) { return displacementAt(patch, exp, d, p, q, r); };
    const Vec3 dx = (u(xi + step, eta, z) - u(xi - step, eta, z)) / (2 * step);
    const Vec3 dy = (u(xi, eta + step, z) - u(xi, eta - step, z)) / (2 * step);
    const Vec3 dz = (u(xi, eta, z + step) - u(xi, eta, z - step)) / (2 * step);
    const Vec6 eps = strainAt(patch, exp, d, xi, eta, z);
    const Real fd[6] = {dx[0], dy[1], dy[0] + dx[1], dx[2] + dz[0], dy[2] + dz[1], dz[2]};
    for (int c = 0; c < 6; ++c)
      if (std::abs(eps[c] - fd[c]) > 1e-6 * std::max(Real(1), std::abs(eps[c]))) {
        bad.push_back("strain finite-difference check");
        break;
      }
  }

  GlobalSystem sys;
  sys.K = assembleStiffness(patch, lay, exp);
  sys.M = assembleMass(patch, lay, exp);
  sys.P = sinusoidalLoad(patch, exp, 1.0, a);
  sys.dofMap = map;

  if ((sys.K - sys.K.transpose()).norm() > 1e-12 * sys.K.norm())
    bad.push_back("stiffness symmetry");
  if ((sys.M - sys.M.transpose()).norm() > 1e-12 * sys.M.norm())
    bad.push_back("mass symmetry");
  if (Eigen::LLT<Mat>(sys.M).info() != Eigen::Success) bad.push_back("mass definiteness");

  // rigid motions: translations and rotations, coefficients from Greville
  // samples of the affine map
  {
    const auto gu = grevilleAbscissae(patch.knotU);
    const auto gv = grevilleAbscissae(patch.knotV);
    auto field = [&](int comp, int tau, std::function<Real(Real, Real)> f) {
      Vec d = Vec::Zero(map.total());
      for (int iu = 0; iu < patch.countU(); ++iu)
        for (int iv = 0; iv < patch.countV(); ++iv)
          d[map.dof(map.pointIndex(iu, iv), comp, tau)] = f(a * gu[iu], a * gv[iv]);
      return d;
    };
    auto constant = [](Real, Real) { return 1.0; };
    const std::vector<Vec> rigid = {
        field(CompU, 0, constant),
        field(CompV, 0, constant),
        field(CompW, 0, constant),
        field(CompU, 0, [](Real, Real y) { return -y; }) +
            field(CompV, 0, [](Real x, Real) { return x; }),
        field(CompU, 1, constant) + field(CompW, 0, [](Real x, Real) { return -x; }),
        field(CompV, 1, constant) + field(CompW, 0, [](Real, Real y) { return -y; }),
    };
    for (const Vec& d : rigid)
      if ((sys.K * d).norm() > 1e-10 * sys.K.norm() * d.norm()) {
        bad.push_back("rigid motions");
        break;
      }
  }

  // resultant of the sinusoidal pressure
  {
    Real total = 0;
    for (int cp = 0; cp < map.pointCount(); ++cp) total += sys.P[map.dof(cp, CompW, 0)];
    const Real expected = 4.0 * a * a / (M_PI * M_PI);
    if (std::abs(total - expected) > 1e-10 * expected) bad.push_back("load resultant");
  }

  const ConstrainedSystem red = applyBoundary(sys, BoundaryKind::SimplySupported, patch);
  if (Eigen::LLT<Mat>(red.K).info() != Eigen::Success)
    bad.push_back("constrained stiffness definiteness");

  // Rayleigh quotients and mass orthonormality of the lowest modes
  {
    const ModalResult mr = solveModes(red, 4);
    const Mat gram = mr.modes.transpose() * red.M * mr.modes;
    if ((gram - Mat::Identity(4, 4)).norm() > 1e-8) bad.push_back("mode orthonormality");
    for (int i = 0; i < 4; ++i) {
      const Real rq = mr.modes.col(i).dot(red.K * mr.modes.col(i));
      if (std::abs(rq - mr.omega[i] * mr.omega[i]) > 1e-8 * mr.omega[i] * mr.omega[i]) {
        bad.push_back("Rayleigh quotients");
        break;
      }
    }
  }

  // bitwise repeatability of a full case run
  {
    const CaseResult r1 = run("table1-quadratic-5x5");
    const CaseResult r2 = run("table1-quadratic-5x5");
    bool same = toCsv(caseTable(r1)) == toCsv(caseTable(r2));
    for (std::size_t i = 0; same && i < r1.values.size(); ++i)
      same = r1.values[i].computed == r2.values[i].computed;
    if (!same) bad.push_back("determinism");
  }

  std::string detail = "partition of unity, strain consistency, operator structure, rigid "
                       "motions, load resultant, modal identities, determinism";
  if (!bad.empty()) {
    detail = "failed: " + bad[0];
    for (std::size_t i = 1; i < bad.size(); ++i) detail += ", " + bad[i];
  }
  report(7, bad.empty(), detail);
}

void criterion8() {
  const Real h = 0.2;
  const Lamina m = makeLamina(25, 1, 0.5, 0.5, 0.2, 0.25);
  const ThicknessExpansion exp = sinusW2(h);
  AssemblyOptions opts;
  opts.stabilization = false;

  bool pass = true;
  Real worstK = 0, worstM = 0;
  for (int degree : {2, 3})
    for (const std::vector<Real>& angles :
         {std::vector<Real>{0.0}, std::vector<Real>{0.0, M_PI / 2}}) {
      const NurbsPatch patch = makeSquarePatch(1.0, degree, 1);
      const Layup lay = makeLayup(m, angles, h);
      for (bool coupling : {false, true}) {
        opts.thicknessCoupling = coupling;
        const Mat K = assembleStiffness(patch, lay, exp, opts);
        const Mat Kref = oracle::volumeStiffness(patch, lay, exp, degree + 5, 24, coupling);
        worstK = std::max(worstK, (K - Kref).norm() / Kref.norm());
      }
      const Mat M = assembleMass(patch, lay, exp);
      const Mat Mref = oracle::volumeMass(patch, lay, exp, degree + 5, 24);
      worstM = std::max(worstM, (M - Mref).norm() / Mref.norm());
    }
  pass = worstK <= 1e-9 && worstM <= 1e-9;

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "single-element operators vs brute volume quadrature, both layer laws: max "
                "relative difference K %.2e, M %.2e (budget 1e-9)",
                worstK, worstM);
  report(8, pass, buf);
}

}  // namespace

int main() {
  using CriterionFn = void (*)();
  const CriterionFn crits[] = {criterion1, criterion2, criterion3, criterion4,
                               criterion5, criterion6, criterion7, criterion8};
  int id = 1;
  for (CriterionFn fn : crits) {
    try {
      fn();
    } catch (const std::exception& e) {
      report(id, false, std::string("exception: ") + e.what());
    }
    ++id;
  }
  if (failures == 0) {
    std::printf("all criteria satisfied\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", failures);
  return 1;
}
