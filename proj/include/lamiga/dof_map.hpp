#pragma once

#include "lamiga/thickness.hpp"
#include "lamiga/types.hpp"

namespace lamiga {

/// Global DOF numbering: control points outer, then component, then expansion
/// index.  Control points are linearised row-major over the (iu, iv) grid.
class DofMap {
 public:
  DofMap() = default;
  DofMap(int nU, int nV, const ThicknessExpansion& exp) : nU_(nU), nV_(nV) {
    offsets_[0] = 0;
    for (int c = 0; c < 3; ++c) {
      counts_[c] = exp.count(c);
      if (c > 0) offsets_[c] = offsets_[c - 1] + counts_[c - 1];
    }
    perPoint_ = counts_[0] + counts_[1] + counts_[2];
  }

  int nU() const { return nU_; }
  int nV() const { return nV_; }
  int pointCount() const { return nU_ * nV_; }
  int perPoint() const { return perPoint_; }
  int total() const { return pointCount() * perPoint_; }
  int tauCount(int comp) const { return counts_[comp]; }

  int pointIndex(int iu, int iv) const { return iu * nV_ + iv; }
  int dof(int point, int comp, int tau) const {
    return point * perPoint_ + offsets_[comp] + tau;
  }
  /// Offset of (comp, tau) within a control point's block.
  int localOffset(int comp, int tau) const { return offsets_[comp] + tau; }

 private:
  int nU_ = 0, nV_ = 0;
  int perPoint_ = 0;
  std::array<int, 3> counts_{0, 0, 0};
  std::array<int, 3> offsets_{0, 0, 0};
};

}  // namespace lamiga
