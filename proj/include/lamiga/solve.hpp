#pragma once

#include "lamiga/assembly.hpp"

namespace lamiga {

/// Direct solve of the constrained static system.  Applies one round of
/// iterative refinement; throws SolveError if the residual stays above
/// 1e-10 * |P|.
Vec solveStatic(const ConstrainedSystem& sys);

struct ModalResult {
  Vec omega;  // ascending angular frequencies
  Mat modes;  // columns, mass-normalised, reduced numbering
};

/// Lowest `count` modes of K x = omega^2 M x on the free DOFs.
ModalResult solveModes(const ConstrainedSystem& sys, int count);

}  // namespace lamiga
