#pragma once

#include <vector>

#include "signet/congruence.hpp"
#include "signet/graph.hpp"

namespace signet {

// Eigenvalues of a symmetric matrix via cyclic Jacobi rotations, ascending.
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a);

struct FloatInertia {
  InertiaTriple inertia;
  // True when some |eigenvalue| lies in [tol, 10*tol): the zero/nonzero
  // decision would be fragile and the result should not be trusted.
  bool ambiguous = false;
};

// Independent floating-point check of the exact congruence route. Test-only
// by design; the exact path never consults it.
FloatInertia float_crosscheck(const SignedGraph& g, double tol = 1e-8);

}  // namespace signet
