#pragma once

#include "signet/structure.hpp"

namespace signet {

// Closed-form negative inertia of a signed cycle on n vertices:
//   balanced:   ceil(n/2)-1 if n = 0,1 (mod 4), ceil(n/2) if n = 2,3 (mod 4)
//   unbalanced: ceil(n/2)-1 if n = 2,3 (mod 4), ceil(n/2) if n = 0,1 (mod 4)
int cycle_negative_inertia(int n, bool balanced);

// floor(n/2), independent of the edge signs.
int path_negative_inertia(int n);

// k + sum floor(l_i/2) for a decomposition with k >= 1 stars. These closed
// forms are oracles; the decision procedures always recompute exactly.
int canonical_unicyclic_negative_inertia(const StarDecomposition& d);

}  // namespace signet
