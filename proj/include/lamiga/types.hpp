#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace lamiga {

using Real = double;

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<Real, 6, 1>;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Mat6 = Eigen::Matrix<Real, 6, 6>;

// Displacement component indices used throughout assembly and recovery.
enum Component : int { CompU = 0, CompV = 1, CompW = 2 };

// Strain component ordering used for all 6x6 material matrices and B-operators:
// (e_xx, e_yy, g_xy | g_xz, g_yz, e_zz).  The in-plane/transverse split is then
// an index-literal 3+3 partition.
enum Strain : int { Sxx = 0, Syy = 1, Sxy = 2, Sxz = 3, Syz = 4, Szz = 5 };

struct RefinementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MaterialError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MeshError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lamiga
