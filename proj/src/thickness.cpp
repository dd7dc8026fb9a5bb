#include "lamiga/thickness.hpp"

#include <cmath>

#include "lamiga/quadrature.hpp"

namespace lamiga {

int ThicknessExpansion::maxCount() const {
  return std::max({count(0), count(1), count(2)});
}

int ThicknessExpansion::dofsPerPoint() const { return count(0) + count(1) + count(2); }

ThicknessExpansion sinusW2(Real h) {
  if (h <= 0) throw std::invalid_argument("sinusW2: thickness must be positive");
  ThicknessExpansion e;
  e.h = h;
  const ThicknessFunction one{[](Real) { return 1.0; }, [](Real) { return 0.0; }, "1"};
  const ThicknessFunction lin{[](Real z) { return z; }, [](Real) { return 1.0; }, "z"};
  const ThicknessFunction sine{[h](Real z) { return std::sin(M_PI * z / h); },
                               [h](Real z) { return M_PI / h * std::cos(M_PI * z / h); },
                               "sin(pi z/h)"};
  const ThicknessFunction quad{[](Real z) { return z * z; }, [](Real z) { return 2.0 * z; },
                               "z^2"};
  e.terms[CompU] = {one, lin, sine};
  e.terms[CompV] = {one, lin, sine};
  e.terms[CompW] = {one, lin, quad};
  return e;
}

ThicknessIntegralTable::ThicknessIntegralTable(int layerCount, std::array<int, 3> counts)
    : layers_(layerCount), counts_(counts) {
  maxCount_ = std::max({counts[0], counts[1], counts[2]});
  data_.assign(static_cast<std::size_t>(layers_) * 9 * 4 * maxCount_ * maxCount_, 0.0);
}

int ThicknessIntegralTable::index(int k, int ca, int cb, int da, int db, int s, int tau) const {
  if (k < 0 || k >= layers_) throw std::out_of_range("thickness table: layer index");
  if (ca < 0 || ca > 2 || cb < 0 || cb > 2 || da < 0 || da > 1 || db < 0 || db > 1)
    throw std::out_of_range("thickness table: component or derivative flag");
  if (s < 0 || s >= counts_[ca] || tau < 0 || tau >= counts_[cb])
    throw std::out_of_range("thickness table: expansion index");
  return ((((k * 3 + ca) * 3 + cb) * 2 + da) * 2 + db) * maxCount_ * maxCount_ + s * maxCount_ +
         tau;
}

Real ThicknessIntegralTable::value(int k, int ca, int cb, int da, int db, int s, int tau) const {
  return data_[index(k, ca, cb, da, db, s, tau)];
}

Real& ThicknessIntegralTable::at(int k, int ca, int cb, int da, int db, int s, int tau) {
  return data_[index(k, ca, cb, da, db, s, tau)];
}

ThicknessIntegralTable integrateThickness(const Layup& layup, const ThicknessExpansion& exp,
                                          int nGaussZ) {
  if (nGaussZ < 4) throw std::invalid_argument("integrateThickness: nGaussZ must be >= 4");
  layup.validate();
  ThicknessIntegralTable table(layup.count(),
                               {exp.count(0), exp.count(1), exp.count(2)});
  const std::vector<Real> z = layup.interfaces();
  const GaussRule& rule = gaussLegendre(nGaussZ);

  for (int k = 0; k < layup.count(); ++k) {
    const Real mid = (z[k] + z[k + 1]) / 2.0;
    const Real half = (z[k + 1] - z[k]) / 2.0;
    for (int ca = 0; ca < 3; ++ca)
      for (int cb = 0; cb < 3; ++cb)
        for (int s = 0; s < exp.count(ca); ++s)
          for (int tau = 0; tau < exp.count(cb); ++tau) {
            const ThicknessFunction& fa = exp.terms[ca][s];
            const ThicknessFunction& fb = exp.terms[cb][tau];
            Real acc[2][2] = {{0, 0}, {0, 0}};
            for (int g = 0; g < nGaussZ; ++g) {
              const Real zz = mid + half * rule.nodes[g];
              const Real w = half * rule.weights[g];
              const Real va[2] = {fa.value(zz), fa.deriv(zz)};
              const Real vb[2] = {fb.value(zz), fb.deriv(zz)};
              for (int da = 0; da < 2; ++da)
                for (int db = 0; db < 2; ++db) acc[da][db] += w * va[da] * vb[db];
            }
            for (int da = 0; da < 2; ++da)
              for (int db = 0; db < 2; ++db)
                table.at(k, ca, cb, da, db, s, tau) = acc[da][db];
          }
  }
  return table;
}

}  // namespace lamiga
