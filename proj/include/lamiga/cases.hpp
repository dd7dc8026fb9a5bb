#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lamiga/assembly.hpp"
#include "lamiga/types.hpp"

namespace lamiga {

struct MaterialSpec {
  Real E1 = 0, E2 = 0, G12 = 0, G13 = 0, G23 = 0, nu12 = 0;
  Real rho = 1;
  // Optional; completed as E3 = E2, nu13 = nu12, nu23 = nu12 when absent.
  std::optional<Real> E3, nu13, nu23;

  bool operator==(const MaterialSpec&) const = default;
  Lamina lamina() const;
  bool usesCompletion() const { return !E3 || !nu13 || !nu23; }
};

enum class GeometryKind { Square, Circle };

struct GeometrySpec {
  GeometryKind kind = GeometryKind::Square;
  Real size = 1;  // side length (square) or radius (circle)
  bool operator==(const GeometrySpec&) const = default;
};

enum class AnalysisKind { Static, Modes };

struct AnalysisSpec {
  AnalysisKind kind = AnalysisKind::Static;
  Real P0 = 1;        // sinusoidal pressure amplitude, static analyses
  int modeCount = 1;  // modes reported, modal analyses
  bool operator==(const AnalysisSpec&) const = default;
};

struct StabilizationSpec {
  bool enabled = true;
  Real alpha = 0.1;
  bool operator==(const StabilizationSpec&) const = default;
};

/// One requested scalar.  `quantity` is wbar, sxx, syy, txz, or omega<k>
/// (k = 1-based mode number).  `at` is the physical evaluation point for the
/// static quantities.  tolerance = 0 or a missing reference leaves the value
/// reported but unchecked.
struct OutputSpec {
  std::string quantity;
  std::array<Real, 3> at{0, 0, 0};
  std::optional<Real> reference;
  std::string referenceLabel;
  Real tolerance = 0;
  bool operator==(const OutputSpec&) const = default;
};

struct CaseSpec {
  std::string name;
  GeometrySpec geometry;
  Real thickness = 0;
  MaterialSpec material;
  std::vector<Real> anglesDeg;
  std::string theory = "sinus-w2";
  int degree = 4;
  int mesh = 9;  // elements per parametric direction
  AnalysisSpec analysis;
  BoundaryKind boundary = BoundaryKind::SimplySupported;
  StabilizationSpec stabilization;
  // Forwarded to AssemblyOptions and stress recovery; false reproduces the
  // benchmark tables.
  bool thicknessCoupling = false;
  int gaussZ = 12;
  std::vector<OutputSpec> outputs;

  bool operator==(const CaseSpec&) const = default;
  void validate() const;  // throws std::invalid_argument
};

std::string toJson(const CaseSpec& spec);
CaseSpec caseFromJson(const std::string& text);
CaseSpec loadCaseFile(const std::string& path);

struct QuantityValue {
  std::string quantity;
  Real computed = 0;
  std::optional<Real> reference;
  std::string referenceLabel;
  Real tolerance = 0;
  std::optional<Real> deviation;  // |computed - reference| / |reference|
};

struct CaseResult {
  std::string name;
  std::vector<QuantityValue> values;
  std::vector<std::pair<std::string, std::string>> metadata;
  Real runtimeSeconds = 0;

  const QuantityValue* find(const std::string& quantity) const;
};

/// Full pipeline: geometry, laminate, expansion, assembly, boundary,
/// solve, recovery, nondimensionalisation.  Deterministic: equal specs give
/// identical results apart from runtimeSeconds.
CaseResult runCase(const CaseSpec& spec);

/// Patch construction used by runCase, exposed for tests: square patches are
/// built directly at the requested degree; the circle starts from the exact
/// quadratic geometry, is degree-elevated, then uniformly refined.
NurbsPatch buildCasePatch(const CaseSpec& spec);

}  // namespace lamiga
