#include "lamiga/cases.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lamiga/fields.hpp"
#include "lamiga/solve.hpp"

namespace lamiga {

namespace {

using Json = nlohmann::ordered_json;

enum class QKind { WBar, SigmaXX, SigmaYY, TauXZ, Omega };

struct ParsedQuantity {
  QKind kind;
  int mode = 0;  // 1-based, omega only
};

ParsedQuantity parseQuantity(const std::string& q) {
  if (q == "wbar") return {QKind::WBar};
  if (q == "sxx") return {QKind::SigmaXX};
  if (q == "syy") return {QKind::SigmaYY};
  if (q == "txz") return {QKind::TauXZ};
  if (q.rfind("omega", 0) == 0) {
    const std::string tail = q.substr(5);
    try {
      std::size_t used = 0;
      const int mode = std::stoi(tail, &used);
      if (used == tail.size() && mode >= 1) return {QKind::Omega, mode};
    } catch (const std::exception&) {
    }
  }
  throw std::invalid_argument("unknown output quantity '" + q + "'");
}

std::string formatReal(Real v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void requireKeys(const Json& obj, const char* where, std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed)
      if (item.key() == k) known = true;
    if (!known)
      throw std::invalid_argument(std::string("unknown key '") + item.key() + "' in " + where);
  }
}

Real numberAt(const Json& obj, const char* key, const char* where) {
  if (!obj.contains(key) || !obj[key].is_number())
    throw std::invalid_argument(std::string(where) + " requires numeric '" + key + "'");
  return obj[key].get<Real>();
}

}  // namespace

Lamina MaterialSpec::lamina() const {
  return makeLamina(E1, E2, G12, G13, G23, nu12, rho, E3, nu13, nu23);
}

void CaseSpec::validate() const {
  if (name.empty()) throw std::invalid_argument("case name must not be empty");
  if (theory != "sinus-w2")
    throw std::invalid_argument("case '" + name + "': unknown theory '" + theory + "'");
  if (degree < 2 || degree > 4)
    throw std::invalid_argument("case '" + name + "': degree must be 2, 3 or 4");
  if (mesh < 1) throw std::invalid_argument("case '" + name + "': mesh must be >= 1");
  if (!(thickness > 0)) throw std::invalid_argument("case '" + name + "': thickness must be > 0");
  if (!(geometry.size > 0))
    throw std::invalid_argument("case '" + name + "': geometry size must be > 0");
  if (anglesDeg.empty())
    throw std::invalid_argument("case '" + name + "': at least one ply angle is required");
  if (geometry.kind == GeometryKind::Circle && analysis.kind == AnalysisKind::Static)
    throw std::invalid_argument("case '" + name +
                                "': the sinusoidal pressure load is defined on square plates");
  if (analysis.kind == AnalysisKind::Modes && analysis.modeCount < 1)
    throw std::invalid_argument("case '" + name + "': mode count must be >= 1");
  for (const OutputSpec& o : outputs) {
    const ParsedQuantity pq = parseQuantity(o.quantity);
    const bool wantsModes = pq.kind == QKind::Omega;
    if (wantsModes != (analysis.kind == AnalysisKind::Modes))
      throw std::invalid_argument("case '" + name + "': output '" + o.quantity +
                                  "' does not match the analysis kind");
    if (o.tolerance < 0)
      throw std::invalid_argument("case '" + name + "': tolerance must be >= 0");
  }
}

std::string toJson(const CaseSpec& s) {
  Json j;
  j["name"] = s.name;
  j["geometry"] = {{"kind", s.geometry.kind == GeometryKind::Square ? "square" : "circle"},
                   {"size", s.geometry.size}};
  j["thickness"] = s.thickness;
  Json m{{"E1", s.material.E1}, {"E2", s.material.E2},   {"G12", s.material.G12},
         {"G13", s.material.G13}, {"G23", s.material.G23}, {"nu12", s.material.nu12},
         {"rho", s.material.rho}};
  if (s.material.E3) m["E3"] = *s.material.E3;
  if (s.material.nu13) m["nu13"] = *s.material.nu13;
  if (s.material.nu23) m["nu23"] = *s.material.nu23;
  j["material"] = std::move(m);
  j["angles_deg"] = s.anglesDeg;
  j["theory"] = s.theory;
  j["degree"] = s.degree;
  j["mesh"] = s.mesh;
  if (s.analysis.kind == AnalysisKind::Static)
    j["analysis"] = {{"kind", "static"}, {"P0", s.analysis.P0}};
  else
    j["analysis"] = {{"kind", "modes"}, {"count", s.analysis.modeCount}};
  j["boundary"] =
      s.boundary == BoundaryKind::SimplySupported ? "simply-supported" : "clamped";
  j["stabilization"] = {{"enabled", s.stabilization.enabled}, {"alpha", s.stabilization.alpha}};
  j["thickness_coupling"] = s.thicknessCoupling;
  j["gauss_z"] = s.gaussZ;
  Json outs = Json::array();
  for (const OutputSpec& o : s.outputs) {
    Json jo;
    jo["quantity"] = o.quantity;
    if (parseQuantity(o.quantity).kind != QKind::Omega)
      jo["at"] = {o.at[0], o.at[1], o.at[2]};
    if (o.reference) jo["reference"] = *o.reference;
    if (!o.referenceLabel.empty()) jo["label"] = o.referenceLabel;
    if (o.tolerance > 0) jo["tolerance"] = o.tolerance;
    outs.push_back(std::move(jo));
  }
  j["outputs"] = std::move(outs);
  return j.dump(2) + "\n";
}

CaseSpec caseFromJson(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("case file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("case file must contain a JSON object");
  requireKeys(j, "case", {"name", "geometry", "thickness", "material", "angles_deg", "theory",
                          "degree", "mesh", "analysis", "boundary", "stabilization",
                          "thickness_coupling", "gauss_z", "outputs"});

  CaseSpec s;
  if (!j.contains("name") || !j["name"].is_string())
    throw std::invalid_argument("case requires a string 'name'");
  s.name = j["name"].get<std::string>();

  {
    const Json& g = j.at("geometry");
    requireKeys(g, "geometry", {"kind", "size"});
    const std::string kind = g.at("kind").get<std::string>();
    if (kind == "square")
      s.geometry.kind = GeometryKind::Square;
    else if (kind == "circle")
      s.geometry.kind = GeometryKind::Circle;
    else
      throw std::invalid_argument("geometry kind must be 'square' or 'circle'");
    s.geometry.size = numberAt(g, "size", "geometry");
  }
  s.thickness = numberAt(j, "thickness", "case");

  {
    const Json& m = j.at("material");
    requireKeys(m, "material",
                {"E1", "E2", "E3", "G12", "G13", "G23", "nu12", "nu13", "nu23", "rho"});
    s.material.E1 = numberAt(m, "E1", "material");
    s.material.E2 = numberAt(m, "E2", "material");
    s.material.G12 = numberAt(m, "G12", "material");
    s.material.G13 = numberAt(m, "G13", "material");
    s.material.G23 = numberAt(m, "G23", "material");
    s.material.nu12 = numberAt(m, "nu12", "material");
    s.material.rho = m.contains("rho") ? numberAt(m, "rho", "material") : 1.0;
    if (m.contains("E3")) s.material.E3 = numberAt(m, "E3", "material");
    if (m.contains("nu13")) s.material.nu13 = numberAt(m, "nu13", "material");
    if (m.contains("nu23")) s.material.nu23 = numberAt(m, "nu23", "material");
  }

  if (!j.contains("angles_deg") || !j["angles_deg"].is_array())
    throw std::invalid_argument("case requires an 'angles_deg' array");
  for (const Json& a : j["angles_deg"]) {
    if (!a.is_number()) throw std::invalid_argument("angles_deg entries must be numbers");
    s.anglesDeg.push_back(a.get<Real>());
  }

  if (j.contains("theory")) s.theory = j["theory"].get<std::string>();
  if (j.contains("degree")) s.degree = j["degree"].get<int>();
  if (j.contains("mesh")) s.mesh = j["mesh"].get<int>();

  {
    const Json& a = j.at("analysis");
    requireKeys(a, "analysis", {"kind", "P0", "count"});
    const std::string kind = a.at("kind").get<std::string>();
    if (kind == "static") {
      s.analysis.kind = AnalysisKind::Static;
      if (a.contains("P0")) s.analysis.P0 = numberAt(a, "P0", "analysis");
    } else if (kind == "modes") {
      s.analysis.kind = AnalysisKind::Modes;
      s.analysis.modeCount = a.contains("count") ? a["count"].get<int>() : 1;
    } else {
      throw std::invalid_argument("analysis kind must be 'static' or 'modes'");
    }
  }

  if (j.contains("boundary")) {
    const std::string b = j["boundary"].get<std::string>();
    if (b == "simply-supported")
      s.boundary = BoundaryKind::SimplySupported;
    else if (b == "clamped")
      s.boundary = BoundaryKind::Clamped;
    else
      throw std::invalid_argument("boundary must be 'simply-supported' or 'clamped'");
  }
  if (j.contains("stabilization")) {
    const Json& st = j["stabilization"];
    requireKeys(st, "stabilization", {"enabled", "alpha"});
    if (st.contains("enabled")) s.stabilization.enabled = st["enabled"].get<bool>();
    if (st.contains("alpha")) s.stabilization.alpha = numberAt(st, "alpha", "stabilization");
  }
  if (j.contains("thickness_coupling")) {
    if (!j["thickness_coupling"].is_boolean())
      throw std::invalid_argument("'thickness_coupling' must be a boolean");
    s.thicknessCoupling = j["thickness_coupling"].get<bool>();
  }
  if (j.contains("gauss_z")) s.gaussZ = j["gauss_z"].get<int>();

  if (j.contains("outputs")) {
    if (!j["outputs"].is_array()) throw std::invalid_argument("'outputs' must be an array");
    for (const Json& jo : j["outputs"]) {
      requireKeys(jo, "output", {"quantity", "at", "reference", "label", "tolerance"});
      OutputSpec o;
      o.quantity = jo.at("quantity").get<std::string>();
      if (jo.contains("at")) {
        const Json& at = jo["at"];
        if (!at.is_array() || at.size() != 3)
          throw std::invalid_argument("output 'at' must be an [x, y, z] triple");
        for (int i = 0; i < 3; ++i) o.at[i] = at[i].get<Real>();
      }
      if (jo.contains("reference")) o.reference = jo["reference"].get<Real>();
      if (jo.contains("label")) o.referenceLabel = jo["label"].get<std::string>();
      if (jo.contains("tolerance")) o.tolerance = jo["tolerance"].get<Real>();
      s.outputs.push_back(std::move(o));
    }
  }

  s.validate();
  return s;
}

CaseSpec loadCaseFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open case file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return caseFromJson(buf.str());
}

const QuantityValue* CaseResult::find(const std::string& quantity) const {
  for (const QuantityValue& v : values)
    if (v.quantity == quantity) return &v;
  return nullptr;
}

NurbsPatch buildCasePatch(const CaseSpec& spec) {
  if (spec.geometry.kind == GeometryKind::Square)
    return makeSquarePatch(spec.geometry.size, spec.degree, spec.mesh);
  if (std::abs(spec.geometry.size - 0.5) > 1e-14)
    throw std::invalid_argument("case '" + spec.name + "': the circle geometry has radius 0.5");
  NurbsPatch patch = makeCirclePatch();
  if (spec.degree > 2) {
    patch = elevateDegree(patch, Direction::U, spec.degree - 2);
    patch = elevateDegree(patch, Direction::V, spec.degree - 2);
  }
  return refineToSpans(patch, spec.mesh, spec.mesh);
}

CaseResult runCase(const CaseSpec& spec) {
  spec.validate();
  const auto t0 = std::chrono::steady_clock::now();

  const NurbsPatch patch = buildCasePatch(spec);
  std::vector<Real> angles;
  for (Real deg : spec.anglesDeg) angles.push_back(deg * M_PI / 180.0);
  const Layup layup = makeLayup(spec.material.lamina(), angles, spec.thickness);
  const ThicknessExpansion exp = sinusW2(spec.thickness);

  AssemblyOptions options;
  options.stabilization = spec.stabilization.enabled;
  options.alpha = spec.stabilization.alpha;
  options.gaussZ = spec.gaussZ;
  options.thicknessCoupling = spec.thicknessCoupling;

  GlobalSystem sys;
  sys.dofMap = DofMap(patch.countU(), patch.countV(), exp);
  sys.K = assembleStiffness(patch, layup, exp, options);
  if (spec.analysis.kind == AnalysisKind::Static)
    sys.P = sinusoidalLoad(patch, exp, spec.analysis.P0, spec.geometry.size);
  else
    sys.M = assembleMass(patch, layup, exp, spec.gaussZ);
  const ConstrainedSystem cs = applyBoundary(sys, spec.boundary, patch);

  CaseResult out;
  out.name = spec.name;
  const Real a = spec.geometry.size;
  const Real h = spec.thickness;
  // The tabulated clamped-disk frequencies scale with the diameter.
  const Real freqLength = spec.geometry.kind == GeometryKind::Circle ? 2.0 * a : a;

  auto record = [&out](const OutputSpec& o, Real computed) {
    QuantityValue v;
    v.quantity = o.quantity;
    v.computed = computed;
    v.reference = o.reference;
    v.referenceLabel = o.referenceLabel;
    v.tolerance = o.tolerance;
    if (o.reference && *o.reference != 0.0)
      v.deviation = std::abs(computed - *o.reference) / std::abs(*o.reference);
    out.values.push_back(std::move(v));
  };

  bool usedStress = false;
  if (spec.analysis.kind == AnalysisKind::Static) {
    const Vec d = cs.expand(solveStatic(cs));
    for (const OutputSpec& o : spec.outputs) {
      const ParsedQuantity pq = parseQuantity(o.quantity);
      const PointState st = evaluateAt(patch, layup, exp, d, o.at[0], o.at[1], o.at[2], options);
      Real value = 0;
      switch (pq.kind) {
        case QKind::WBar:
          value = nondimDeflection(st.displacement[CompW], a, h, spec.material.E2,
                                   spec.analysis.P0);
          break;
        case QKind::SigmaXX:
          value = nondimInplaneStress(st.stress[Sxx], a, h, spec.analysis.P0);
          usedStress = true;
          break;
        case QKind::SigmaYY:
          value = nondimInplaneStress(st.stress[Syy], a, h, spec.analysis.P0);
          usedStress = true;
          break;
        case QKind::TauXZ:
          value = nondimShearStress(st.stress[Sxz], a, h, spec.analysis.P0);
          usedStress = true;
          break;
        default:
          break;
      }
      record(o, value);
    }
  } else {
    int maxMode = spec.analysis.modeCount;
    for (const OutputSpec& o : spec.outputs)
      maxMode = std::max(maxMode, parseQuantity(o.quantity).mode);

    // On thick plates in-plane modes drop below the transverse branch the
    // tables enumerate, so rank only modes whose transverse fields carry at
    // least half the modal mass.  The mass matrix has no cross-component
    // terms, making the shares of a mass-normalised mode sum to one.
    const int n = static_cast<int>(cs.K.rows());
    const int wBegin = sys.dofMap.localOffset(CompW, 0);
    const int wEnd = wBegin + sys.dofMap.tauCount(CompW);
    const int per = sys.dofMap.perPoint();
    std::vector<Real> omega;
    for (int request = std::min(n, maxMode + 8); static_cast<int>(omega.size()) < maxMode;
         request = std::min(n, 2 * request)) {
      const ModalResult mr = solveModes(cs, request);
      omega.clear();
      for (int k = 0; k < mr.omega.size() && static_cast<int>(omega.size()) < maxMode; ++k) {
        Vec masked = Vec::Zero(n);
        for (int i = 0; i < n; ++i) {
          const int local = cs.freeDofs[i] % per;
          if (local >= wBegin && local < wEnd) masked[i] = mr.modes(i, k);
        }
        if (masked.dot(cs.M * masked) >= 0.5) omega.push_back(mr.omega[k]);
      }
      if (request == n) break;
    }
    if (static_cast<int>(omega.size()) < maxMode)
      throw SolveError("case '" + spec.name + "': only " + std::to_string(omega.size()) +
                       " transverse modes in a spectrum of " + std::to_string(n));
    for (const OutputSpec& o : spec.outputs) {
      const int mode = parseQuantity(o.quantity).mode;
      record(o, nondimFrequency(omega[mode - 1], freqLength, h, spec.material.rho,
                                spec.material.E2));
    }
  }

  out.metadata.emplace_back("theory", spec.theory);
  out.metadata.emplace_back("degree", std::to_string(spec.degree));
  out.metadata.emplace_back("mesh", std::to_string(spec.mesh) + "x" + std::to_string(spec.mesh));
  out.metadata.emplace_back("boundary",
                            spec.boundary == BoundaryKind::SimplySupported
                                ? "simply-supported: edges x=const fix the v,w fields, edges "
                                  "y=const fix the u,w fields"
                                : "clamped: all fields fixed on boundary control points");
  out.metadata.emplace_back("stabilization", spec.stabilization.enabled
                                                 ? "on, alpha=" + formatReal(spec.stabilization.alpha)
                                                 : "off");
  out.metadata.emplace_back("layer_law", spec.thicknessCoupling
                                             ? "full 3D stiffness, e_zz coupled"
                                             : "thickness-decoupled, sigma_zz = C33 e_zz");
  out.metadata.emplace_back("gauss_z", std::to_string(spec.gaussZ));
  if (spec.material.usesCompletion())
    out.metadata.emplace_back("material_completion",
                              "omitted constants completed as E3=E2, nu13=nu12, nu23=nu12");
  if (usedStress) {
    out.metadata.emplace_back("interface_rule",
                              "interface z evaluates in the layer nearer the midplane, exact "
                              "ties take the lower layer");
    out.metadata.emplace_back("stress_recovery",
                              "constitutive, with the element law the system was solved with "
                              "(shear relaxation included when stabilization is on)");
  }
  if (spec.analysis.kind == AnalysisKind::Modes) {
    out.metadata.emplace_back(
        "frequency_scale",
        spec.geometry.kind == GeometryKind::Circle
            ? "Omega = omega a^2/h sqrt(rho/E2) with a = diameter (radius scaling is 4x smaller)"
            : "Omega = omega a^2/h sqrt(rho/E2) with a = side length");
    out.metadata.emplace_back("mode_selection",
                              "modes ranked after dropping those whose transverse fields carry "
                              "under half the modal mass");
  }

  out.runtimeSeconds =
      std::chrono::duration<Real>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace lamiga
