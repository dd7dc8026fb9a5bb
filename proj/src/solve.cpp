#include "lamiga/solve.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace lamiga {

Vec solveStatic(const ConstrainedSystem& sys) {
  if (sys.P.size() != sys.K.rows())
    throw SolveError("solveStatic: load vector does not match the stiffness matrix");
  const Real pNorm = sys.P.norm();
  if (pNorm == 0.0) return Vec::Zero(sys.K.rows());

  // Symmetric Jacobi equilibration: the expansion families differ by powers
  // of 1/h in stiffness scale, which wrecks the plain factorisation on thin
  // plates.
  Vec s = sys.K.diagonal().cwiseAbs().cwiseSqrt();
  for (int i = 0; i < s.size(); ++i) s[i] = s[i] > 0.0 ? 1.0 / s[i] : 1.0;
  const Mat Ks = s.asDiagonal() * sys.K * s.asDiagonal();

  Eigen::LDLT<Mat> ldlt(Ks);
  if (ldlt.info() != Eigen::Success)
    throw SolveError("solveStatic: factorisation failed");

  Vec d = s.asDiagonal() * ldlt.solve(s.asDiagonal() * sys.P).eval();
  for (int pass = 0; pass < 8; ++pass) {
    const Vec r = sys.P - sys.K * d;
    if (r.norm() <= 1e-12 * pNorm) break;
    d += s.asDiagonal() * ldlt.solve(s.asDiagonal() * r).eval();
  }
  if ((sys.P - sys.K * d).norm() > 1e-10 * pNorm)
    throw SolveError("solveStatic: residual above tolerance");
  return d;
}

ModalResult solveModes(const ConstrainedSystem& sys, int count) {
  if (sys.M.rows() != sys.K.rows())
    throw SolveError("solveModes: mass matrix does not match the stiffness matrix");
  Eigen::GeneralizedSelfAdjointEigenSolver<Mat> es(sys.K, sys.M);
  if (es.info() != Eigen::Success)
    throw SolveError("solveModes: eigen decomposition failed");

  const int n = static_cast<int>(es.eigenvalues().size());
  const int m = std::min(std::max(count, 0), n);
  ModalResult out;
  out.omega.resize(m);
  out.modes = es.eigenvectors().leftCols(m);
  for (int i = 0; i < m; ++i) {
    const Real lambda = es.eigenvalues()[i];
    if (lambda < -1e-6 * std::abs(es.eigenvalues()[n - 1]))
      throw SolveError("solveModes: negative eigenvalue, system is not positive definite");
    out.omega[i] = std::sqrt(std::max(lambda, 0.0));
  }
  return out;
}

}  // namespace lamiga
