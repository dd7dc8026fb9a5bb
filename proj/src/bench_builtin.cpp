#include <map>
#include <string>

#include "lamiga/bench.hpp"

namespace lamiga {

namespace {

const char* kTabulated = "tabulated";

int degreeOf(const std::string& deg) { return deg == "quadratic" ? 2 : deg == "cubic" ? 3 : 4; }

// E1/E2 = 25 stack used by the static square benchmarks; E2 = 1, P0 = 1.
MaterialSpec staticMaterial() {
  MaterialSpec m;
  m.E1 = 25;
  m.E2 = 1;
  m.G12 = 0.5;
  m.G13 = 0.5;
  m.G23 = 0.2;
  m.nu12 = 0.25;
  m.rho = 1;
  return m;
}

// Dimensional three-layer material; exercises non-unit moduli end to end.
MaterialSpec dimensionalMaterial() {
  MaterialSpec m;
  m.E1 = 132.38e9;
  m.E2 = 10.756e9;
  m.E3 = 10.756e9;
  m.G12 = 3.606e9;
  m.G13 = 5.6537e9;
  m.G23 = 5.6537e9;
  m.nu12 = 0.24;
  m.nu13 = 0.24;
  m.nu23 = 0.49;
  m.rho = 1;
  return m;
}

MaterialSpec vibrationMaterial(Real ratio, bool explicitPoisson) {
  MaterialSpec m;
  m.E1 = ratio;
  m.E2 = 1;
  m.G12 = 0.6;
  m.G13 = 0.6;
  m.G23 = 0.5;
  m.nu12 = 0.25;
  m.rho = 1;
  if (explicitPoisson) {
    m.nu13 = 0.25;
    m.nu23 = 0.25;
  }
  return m;
}

OutputSpec staticOut(const char* q, std::array<Real, 3> at, Real ref, Real tol) {
  OutputSpec o;
  o.quantity = q;
  o.at = at;
  o.reference = ref;
  o.referenceLabel = kTabulated;
  o.tolerance = tol;
  return o;
}

OutputSpec uncheckedOut(const char* q, std::array<Real, 3> at) {
  OutputSpec o;
  o.quantity = q;
  o.at = at;
  return o;
}

OutputSpec modeOut(const std::string& q, Real ref, Real tol) {
  OutputSpec o;
  o.quantity = q;
  o.reference = ref;
  o.referenceLabel = kTabulated;
  o.tolerance = tol;
  return o;
}

CaseSpec squareCase(const std::string& name, Real h, const MaterialSpec& material,
                    std::vector<Real> anglesDeg, int degree, int mesh, AnalysisKind kind) {
  CaseSpec s;
  s.name = name;
  s.geometry = {GeometryKind::Square, 1.0};
  s.thickness = h;
  s.material = material;
  s.anglesDeg = std::move(anglesDeg);
  s.degree = degree;
  // Quadratic runs take the strong end of the stabilization coefficient:
  // at the default 0.1 a residual lock plateau survives past a/h = 500.
  if (degree == 2) s.stabilization.alpha = 0.15;
  s.mesh = mesh;
  s.analysis.kind = kind;
  return s;
}

std::vector<CaseSpec> makeBuiltins() {
  std::vector<CaseSpec> cases;
  const std::string degs[3] = {"quadratic", "cubic", "quartic"};
  const int meshes[3] = {5, 7, 9};

  // Four-layer [0/90/90/0] square, a/h = 4, sinusoidal pressure: deflection
  // and in-plane/transverse stresses across mesh and degree refinement.
  {
    struct Row {
      const char* deg;
      Real w[3], sxx[3], syy[3], txz[3];
    };
    const Row rows[3] = {
        {"quadratic",
         {1.9207, 1.9100, 1.9058},
         {0.6966, 0.7009, 0.7029},
         {0.6179, 0.6221, 0.6239},
         {0.2293, 0.2246, 0.2227}},
        {"cubic",
         {1.9076, 1.9038, 1.9021},
         {0.7074, 0.7063, 0.7061},
         {0.6277, 0.6270, 0.6268},
         {0.2210, 0.2205, 0.2202}},
        {"quartic",
         {1.9045, 1.9020, 1.9010},
         {0.7062, 0.7060, 0.7058},
         {0.6268, 0.6267, 0.6266},
         {0.2205, 0.2202, 0.2201}}};
    const Real h = 0.25;
    for (const Row& row : rows)
      for (int im = 0; im < 3; ++im) {
        const bool gated = std::string(row.deg) == "quartic" && meshes[im] == 9;
        CaseSpec s = squareCase(
            "table1-" + std::string(row.deg) + "-" + std::to_string(meshes[im]) + "x" +
                std::to_string(meshes[im]),
            h, staticMaterial(), {0, 90, 90, 0}, degreeOf(row.deg), meshes[im],
            AnalysisKind::Static);
        s.outputs = {
            staticOut("wbar", {0.5, 0.5, 0}, row.w[im], gated ? 0.005 : 0.01),
            staticOut("sxx", {0.5, 0.5, h / 2}, row.sxx[im], gated ? 0.01 : 0.02),
            staticOut("syy", {0.5, 0.5, h / 4}, row.syy[im], gated ? 0.01 : 0.02),
            staticOut("txz", {0, 0.5, 0}, row.txz[im], gated ? 0.02 : 0.04)};
        cases.push_back(std::move(s));
      }
  }

  // Same laminate at a/h = 10 and 100, 9x9 meshes.
  {
    struct Row {
      const char* deg;
      Real w, sxx, syy, txz;
      bool hasSyy;
    };
    const Row ah10[3] = {{"quadratic", 0.7250, 0.5571, 0.3908, 0.2985, true},
                         {"cubic", 0.7203, 0.5596, 0.3913, 0.2983, true},
                         {"quartic", 0.7187, 0.5594, 0.3907, 0.2967, true}};
    const Row ah100[3] = {{"quadratic", 0.4383, 0.5334, 0, 0.4069, false},
                          {"cubic", 0.4336, 0.5368, 0, 0.3271, false},
                          {"quartic", 0.4317, 0.5366, 0, 0.3275, false}};
    for (int g = 0; g < 2; ++g) {
      const int ratio = g == 0 ? 10 : 100;
      const Row* rows = g == 0 ? ah10 : ah100;
      const Real h = 1.0 / ratio;
      for (int i = 0; i < 3; ++i) {
        const Row& row = rows[i];
        const bool quartic = std::string(row.deg) == "quartic";
        CaseSpec s = squareCase("table2-ah" + std::to_string(ratio) + "-" + row.deg, h,
                                staticMaterial(), {0, 90, 90, 0}, degreeOf(row.deg), 9,
                                AnalysisKind::Static);
        s.outputs.push_back(
            staticOut("wbar", {0.5, 0.5, 0}, row.w, quartic ? 0.005 : 0.01));
        s.outputs.push_back(staticOut("sxx", {0.5, 0.5, h / 2}, row.sxx,
                                      quartic && ratio == 10 ? 0.01 : 0.02));
        if (row.hasSyy)
          s.outputs.push_back(staticOut("syy", {0.5, 0.5, h / 4}, row.syy, 0.02));
        else
          s.outputs.push_back(uncheckedOut("syy", {0.5, 0.5, h / 4}));
        s.outputs.push_back(
            staticOut("txz", {0, 0.5, 0}, row.txz, quartic && ratio == 10 ? 0.02 : 0.04));
        cases.push_back(std::move(s));
      }
    }
  }

  // Three-layer [0/90/0] square with dimensional moduli, top-surface
  // deflection across a/h; the thin end is the locking stress test.
  {
    const int ratios[5] = {10, 50, 100, 500, 1000};
    const Real refs[3][5] = {{0.9252, 0.7713, 0.7650, 0.7624, 0.7624},
                             {0.9226, 0.7704, 0.7656, 0.7640, 0.7639},
                             {0.9217, 0.7695, 0.7646, 0.7631, 0.7630}};
    for (int id = 0; id < 3; ++id)
      for (int ir = 0; ir < 5; ++ir) {
        const Real h = 1.0 / ratios[ir];
        CaseSpec s = squareCase("table3-ah" + std::to_string(ratios[ir]) + "-" + degs[id], h,
                                dimensionalMaterial(), {0, 90, 0}, degreeOf(degs[id]), 9,
                                AnalysisKind::Static);
        s.outputs = {staticOut("wbar", {0.5, 0.5, h / 2}, refs[id][ir],
                               degs[id] == "quartic" ? 0.005 : 0.01)};
        cases.push_back(std::move(s));
      }
  }

  // Fundamental-frequency convergence, [0/90/90/0] square at a/h = 5.
  {
    const Real refs[3][3] = {{10.6926, 10.7295, 10.7454},
                             {10.7340, 10.7517, 10.7590},
                             {10.7498, 10.7598, 10.7640}};
    for (int id = 0; id < 3; ++id)
      for (int im = 0; im < 3; ++im) {
        const bool gated = degs[id] == "quartic" && meshes[im] == 9;
        CaseSpec s = squareCase("table4-" + degs[id] + "-" + std::to_string(meshes[im]) + "x" +
                                    std::to_string(meshes[im]),
                                0.2, vibrationMaterial(40, false), {0, 90, 90, 0},
                                degreeOf(degs[id]), meshes[im], AnalysisKind::Modes);
        s.outputs = {modeOut("omega1", refs[id][im], gated ? 0.005 : 0.01)};
        cases.push_back(std::move(s));
      }
  }

  // Fundamental frequency vs modulus ratio, same plate, 9x9 meshes.
  {
    const int ratios[4] = {10, 20, 30, 40};
    const Real refs[3][4] = {{8.3358, 9.5437, 10.2572, 10.7454},
                             {8.3417, 9.5532, 10.2691, 10.7590},
                             {8.3439, 9.5566, 10.2734, 10.7640}};
    for (int id = 0; id < 3; ++id)
      for (int ir = 0; ir < 4; ++ir) {
        CaseSpec s = squareCase("table5-e" + std::to_string(ratios[ir]) + "-" + degs[id], 0.2,
                                vibrationMaterial(ratios[ir], false), {0, 90, 90, 0},
                                degreeOf(degs[id]), 9, AnalysisKind::Modes);
        s.outputs = {modeOut("omega1", refs[id][ir], degs[id] == "quartic" ? 0.005 : 0.01)};
        cases.push_back(std::move(s));
      }
  }

  // Fundamental frequency vs a/h for the E1/E2 = 40 laminate.
  {
    const int ratios[6] = {2, 4, 10, 20, 50, 100};
    const Real refs[3][6] = {{5.3931, 9.2701, 15.0660, 17.5781, 18.5913, 18.7579},
                             {5.3945, 9.2785, 15.1086, 17.649, 18.6711, 18.8343},
                             {5.3951, 9.2815, 15.1239, 17.6749, 18.7024, 18.8665}};
    for (int id = 0; id < 3; ++id)
      for (int ir = 0; ir < 6; ++ir) {
        const bool quartic = degs[id] == "quartic";
        const Real tol = quartic ? (ratios[ir] == 2 ? 0.015 : 0.01)
                                 : (ratios[ir] == 2 ? 0.03 : 0.02);
        CaseSpec s = squareCase("table6-ah" + std::to_string(ratios[ir]) + "-" + degs[id],
                                1.0 / ratios[ir], vibrationMaterial(40, true), {0, 90, 90, 0},
                                degreeOf(degs[id]), 9, AnalysisKind::Modes);
        s.outputs = {modeOut("omega1", refs[id][ir], tol)};
        cases.push_back(std::move(s));
      }
  }

  // Clamped circular angle-ply [theta/-theta/-theta/theta], R/h = 5,
  // cubic 13x13, first three frequencies.
  {
    const int thetas[4] = {0, 15, 30, 45};
    const Real refs[4][3] = {{22.6663, 30.3485, 41.7294},
                             {23.0024, 31.5752, 43.7671},
                             {23.9749, 35.2577, 44.2964},
                             {24.5253, 37.4311, 44.0796}};
    for (int it = 0; it < 4; ++it) {
      const Real t = thetas[it];
      CaseSpec s;
      s.name = "table8-theta" + std::to_string(thetas[it]);
      s.geometry = {GeometryKind::Circle, 0.5};
      s.thickness = 0.1;
      s.material = vibrationMaterial(40, false);
      s.anglesDeg = {t, -t, -t, t};
      s.degree = 3;
      s.mesh = 13;
      s.analysis.kind = AnalysisKind::Modes;
      s.analysis.modeCount = 3;
      s.boundary = BoundaryKind::Clamped;
      for (int m = 0; m < 3; ++m)
        s.outputs.push_back(modeOut("omega" + std::to_string(m + 1), refs[it][m], 0.015));
      cases.push_back(std::move(s));
    }
  }

  return cases;
}

std::vector<Suite> makeSuites() {
  auto names = [](const std::string& prefix) {
    std::vector<std::string> out;
    for (const CaseSpec& s : builtinCases())
      if (s.name.rfind(prefix, 0) == 0) out.push_back(s.name);
    return out;
  };
  return {
      {"table1", "Four-layer cross-ply square, a/h=4: deflection and stresses vs mesh",
       names("table1-")},
      {"table2", "Four-layer cross-ply square: deflection and stresses vs a/h", names("table2-")},
      {"table3", "Three-layer cross-ply square: top-surface deflection vs a/h", names("table3-")},
      {"table4", "Fundamental frequency convergence, four-layer square at a/h=5",
       names("table4-")},
      {"table5", "Fundamental frequency vs E1/E2, four-layer square at a/h=5", names("table5-")},
      {"table6", "Fundamental frequency vs a/h, four-layer square", names("table6-")},
      {"table8", "Clamped circular angle-ply: first three frequencies vs theta",
       names("table8-")},
  };
}

std::map<std::string, std::vector<LiteratureRow>> makeLiterature() {
  std::map<std::string, std::vector<LiteratureRow>> lit;
  lit["table1:wbar"] = {{"HSDT, Reddy (1984)", {"1.8937"}},
                        {"elasticity, Pagano (1970)", {"1.9540"}}};
  lit["table1:sxx"] = {{"HSDT, Reddy (1984)", {"0.6651"}},
                       {"elasticity, Pagano (1970)", {"0.7200"}}};
  lit["table1:syy"] = {{"HSDT, Reddy (1984)", {"0.6322"}},
                       {"elasticity, Pagano (1970)", {"0.6660"}}};
  lit["table1:txz"] = {{"HSDT, Reddy (1984)", {"0.2064"}},
                       {"elasticity, Pagano (1970)", {"0.2700"}}};
  lit["table2:ah10"] = {
      {"HSDT, Reddy (1984)", {"0.7147", "0.5456", "0.3888", "0.2640"}},
      {"FSDT, Reddy-Chao (1981)", {"0.6628", "0.4989", "0.3615", "0.1667"}},
      {"elasticity, Pagano (1970)", {"0.7430", "0.5590", "0.4030", "0.3010"}},
      {"RBF, Ferreira et al. (2012)", {"0.7325", "0.5627", "0.3908", "0.3321"}},
      {"CS-FEM Q4, Natarajan et al. (2013)", {"0.7195", "0.5597", "0.3905", "0.2952"}}};
  lit["table2:ah100"] = {
      {"HSDT, Reddy (1984)", {"0.4343", "0.5387", "0.2708", "0.2897"}},
      {"FSDT, Reddy-Chao (1981)", {"0.4337", "0.5382", "0.2705", "0.1780"}},
      {"elasticity, Pagano (1970)", {"0.4347", "0.5390", "0.2710", "0.3390"}},
      {"RBF, Ferreira et al. (2012)", {"0.4307", "0.5431", "0.2730", "0.3768"}},
      {"CS-FEM Q4, Natarajan et al. (2013)", {"0.4304", "0.5368", "-", "0.3285"}}};
  lit["table3"] = {
      {"analytical ESL-2, Carrera (1998)", {"0.9249", "0.7767", "0.7720", "0.7705", "0.7704"}},
      {"MITC4, Carrera et al. (2010)", {"0.9195", "0.7713", "0.7666", "0.7650", "0.7650"}},
      {"CS-FEM Q4, Natarajan et al. (2013)",
       {"0.9235", "0.7703", "0.7655", "0.7639", "0.7639"}}};
  lit["table5"] = {
      {"meshfree, Liew et al. (2003)", {"8.2924", "9.5613", "10.3200", "10.8490"}},
      {"HSDT, Reddy-Khdeir (1988)", {"8.2982", "9.5671", "10.3260", "10.8540"}},
      {"HSDT (nu23=0.18), Ferreira et al. (2011)",
       {"8.2999", "9.5411", "10.2687", "10.7652"}},
      {"CS-FEM Q4, Natarajan et al. (2013)", {"8.3642", "9.5793", "10.2973", "10.7887"}}};
  lit["table6"] = {
      {"FSDT, Whitney-Pagano (1970)",
       {"5.4998", "9.3949", "15.1426", "17.6596", "18.6742", "18.8362"}},
      {"12-dof model, Kant-Swaminathan (2001)",
       {"5.4033", "9.2870", "15.1048", "17.6470", "18.6720", "18.8357"}},
      {"9-dof model, Kant-Swaminathan (2001)",
       {"5.3929", "9.2710", "15.0949", "17.6434", "18.6713", "18.8355"}},
      {"HSDT, Reddy (1984)", {"5.5065", "9.3235", "15.1073", "17.6457", "18.6718", "18.8356"}},
      {"HSDT, Senthilnathan et al. (1987)",
       {"6.0017", "10.2032", "15.9405", "17.9938", "18.7381", "18.8526"}},
      {"CS-FEM Q4, Natarajan et al. (2013)",
       {"5.4026", "9.2998", "15.1766", "17.7540", "18.7947", "18.9611"}}};
  lit["table8:theta0"] = {{"MLSDQ-FSDT, Liew et al. (2003)", {"22.2110", "29.6510", "41.1010"}},
                          {"ITSDT-IGA, Thai et al. (2014)", {"23.5781", "30.7459", "42.0042"}}};
  lit["table8:theta15"] = {{"MLSDQ-FSDT, Liew et al. (2003)", {"22.7740", "31.4550", "43.3500"}},
                           {"ITSDT-IGA, Thai et al. (2014)", {"23.6090", "31.7743", "43.9569"}}};
  lit["table8:theta30"] = {{"MLSDQ-FSDT, Liew et al. (2003)", {"24.0710", "36.1530", "43.9680"}},
                           {"ITSDT-IGA, Thai et al. (2014)", {"24.2081", "35.6047", "46.5406"}}};
  lit["table8:theta45"] = {{"MLSDQ-FSDT, Liew et al. (2003)", {"24.7520", "39.1810", "43.6070"}},
                           {"ITSDT-IGA, Thai et al. (2014)", {"24.6607", "37.8980", "46.2560"}}};
  return lit;
}

}  // namespace

const std::vector<CaseSpec>& builtinCases() {
  static const std::vector<CaseSpec> cases = makeBuiltins();
  return cases;
}

const std::vector<Suite>& builtinSuites() {
  static const std::vector<Suite> suites = makeSuites();
  return suites;
}

const CaseSpec* findBuiltinCase(const std::string& name) {
  for (const CaseSpec& s : builtinCases())
    if (s.name == name) return &s;
  return nullptr;
}

const Suite* findBuiltinSuite(const std::string& name) {
  for (const Suite& s : builtinSuites())
    if (s.name == name) return &s;
  return nullptr;
}

const std::vector<LiteratureRow>& literatureRows(const std::string& suiteName) {
  static const std::map<std::string, std::vector<LiteratureRow>> lit = makeLiterature();
  static const std::vector<LiteratureRow> empty;
  const auto it = lit.find(suiteName);
  return it == lit.end() ? empty : it->second;
}

}  // namespace lamiga
