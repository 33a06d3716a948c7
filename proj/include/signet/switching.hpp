#pragma once

#include <vector>

#include "signet/cycles.hpp"
#include "signet/graph.hpp"

namespace signet {

// Vertex sign assignment theta; switching by theta maps sigma(xy) to
// theta(x)*sigma(xy)*theta(y). Applying the same theta twice is the identity.
struct SwitchingFunction {
  std::vector<Sign> vertex_signs;

  static SwitchingFunction identity(int n) {
    return {std::vector<Sign>(static_cast<size_t>(n), Sign::plus())};
  }
  int size() const { return static_cast<int>(vertex_signs.size()); }
};

SignedGraph apply_switching(const SignedGraph& g, const SwitchingFunction& theta);

struct BalanceResult {
  bool balanced = false;
  SwitchingFunction theta;   // set when balanced: switching makes all edges +
  CycleWitness witness;      // set when unbalanced: a negative cycle
};

// Spanning-forest potential scan. Deterministic: BFS in ascending vertex
// order, first negative co-tree edge yields the witness.
BalanceResult balance(const SignedGraph& g);

bool switching_equivalent(const SignedGraph& a, const SignedGraph& b);

// Switching-equivalent copy with every edge positive (balanced case) or all
// positive except the lexicographically smallest cycle edge (unbalanced).
// Requires a connected unicyclic graph.
SignedGraph unicyclic_normal_form(const SignedGraph& g);

}  // namespace signet
