#pragma once

#include <string>
#include <vector>

#include "signet/cycles.hpp"
#include "signet/graph.hpp"

namespace signet {

// Star decomposition of a canonical unicyclic graph: the cycle vertices that
// carry pendants (major vertices) with their pendant sets, plus the orders of
// the path segments left on the cycle after deleting every star. Identity:
// girth = k + sum of segment orders, where k is the number of stars.
struct StarDecomposition {
  CycleWitness cycle;
  std::vector<std::pair<int, std::vector<int>>> stars;  // (major vertex, pendants)
  std::vector<int> segments;                            // may contain zeros

  int star_count() const { return static_cast<int>(stars.size()); }
  int even_segment_count() const;
};

struct CanonicalCheck {
  bool ok = false;
  std::string reason;  // set when !ok
  StarDecomposition decomposition;
};

// Accepts connected unicyclic graphs whose non-cycle vertices are all
// pendants hanging directly off the cycle. Pure cycles are rejected here
// (no stars to decompose); use is_canonical_signed_unicyclic for the class
// membership test that includes them.
CanonicalCheck canonical_unicyclic_check(const SignedGraph& g);

bool is_canonical_signed_unicyclic(const SignedGraph& g);

struct PendantReduction {
  SignedGraph reduced;
  int count = 0;
};

// Repeatedly removes a pendant vertex together with its unique neighbor
// until no pendant remains. Each removal lowers i_plus and i_minus by one.
PendantReduction pendant_reduce(const SignedGraph& g);

struct FanCheck {
  int k = 0;                     // largest fan found
  bool inequality_holds = true;  // floor(g/k) + 2l >= g, vacuous when k == 0
};

// Largest k admitting a k-fan of length l (1 or 2) from x to the cycle:
// internally disjoint paths with distinct terminals. Lengths above 2 are
// unsupported.
FanCheck fan_bound_check(const SignedGraph& g, const CycleWitness& c, int x, int l);

}  // namespace signet
