#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "signet/cycles.hpp"
#include "signet/graph.hpp"

namespace signet {

class FamilyError : public std::runtime_error {
 public:
  explicit FamilyError(const std::string& what) : std::runtime_error(what) {}
};

// Canonical representatives: cycles and stars all positive; an unbalanced
// cycle carries its single negative edge on (0,1).
SignedGraph gen_cycle(int n, bool balanced = true);
SignedGraph gen_path(int n, const std::vector<Sign>& signs = {});
SignedGraph gen_star(int t);

// Theta graph: two branch vertices 0 and 1 joined by three internally
// disjoint paths with a, b, c vertices each (endpoints included). Interior
// vertices are numbered path by path; at most one path may have order 2.
struct ThetaSpec {
  int a = 0, b = 0, c = 0;
  std::vector<Sign> edge_signs;  // optional; edges in path-major order
};
SignedGraph gen_theta(const ThetaSpec& spec);
SignedGraph gen_theta(int a, int b, int c);          // all positive
SignedGraph gen_theta_unbalanced(int a, int b, int c);  // girth cycle positive,
                                                        // one negative edge on the last longest path
int theta_girth(int a, int b, int c);

struct CanonicalUnicyclicSpec {
  int girth = 0;
  bool balanced = true;
  std::vector<std::pair<int, int>> stars;  // (cycle position, pendant count >= 1)
};
// Cycle on 0..girth-1 plus pendant stars; adjacent star positions are
// rejected (they would create zero-length segments).
SignedGraph gen_canonical_unicyclic(const CanonicalUnicyclicSpec& spec);

// Which reading of the parameterized family side conditions applies: the
// claim catalog's statement text, or the conditions its derivation actually
// establishes (adds families 10 and 11 and relaxes family 8).
enum class FamilyConvention { statement, proof };

// Parametric families gamma1..gamma11. `tail` is the deep pendant
// multiplicity at the shared attachment vertex (families 1-3, >= 1);
// `pendants` are per-position pendant counts in the documented order.
// Every constructed graph is validated against the exact inertia oracle.
struct GammaParams {
  int tail = 1;
  std::vector<int> pendants;
};
SignedGraph gen_gamma(int id, const GammaParams& params = {},
                      FamilyConvention conv = FamilyConvention::proof);

int gamma_girth(int id);
int gamma_pendant_slots(int id);

// K-join families: a star center joined into a unicyclic graph that attains
// the ceil(g/2) value.
enum class KJoinMode {
  pendant_attach,  // claim 3.2(3): center joined to exactly one pendant vertex
  cycle_attach,    // claim 3.3(7): center joined to >= 1 cycle vertex
};
struct KJoinSpec {
  KJoinMode mode = KJoinMode::cycle_attach;
  int star_leaves = 1;       // t >= 1 (pendant_attach) or t >= 0 (cycle_attach)
  std::vector<int> targets;  // vertices of gamma_prime
};
SignedGraph gen_kjoin_family(const KJoinSpec& spec, const SignedGraph& gamma_prime);

// Cycle positions where one extra pendant keeps the negative inertia at
// `target`, scanned over the first balanced shortest cycle.
std::vector<int> discover_attachments(const SignedGraph& base, int target_i_minus);
std::vector<int> discover_attachments(const SignedGraph& base, const CycleWitness& cycle,
                                      int target_i_minus);

// Cores pinned by printed adjacency matrices; the sign arrays are the free
// (non-cycle) edges in the printed symbol order.
namespace cores {
// 3-fan core: C6 with x1,x2,x3 on alternating vertices, all adjacent to x'.
// Order y1..y6, x1, x2, x3, x'; signs: a17, a28, a39, a710, a810, a910.
SignedGraph fan3(const std::array<Sign, 6>& s);
// fan3 plus one pendant x at y4. Order y1..y6, x1, x2, x3, x, x';
// signs: a17, a28, a39, a410, a711, a811, a911.
SignedGraph fan3_pendant(const std::array<Sign, 7>& s);
// Theta cores, order y1..y_g, x1, x2, x1', x2'; five free signs along the
// attached path: (y1,x1), (y2,x2), (x1,x1'), (x2,x2'), (x1',x2').
SignedGraph b536(const std::array<Sign, 5>& s);
SignedGraph b626(const std::array<Sign, 5>& s);
SignedGraph b446(const std::array<Sign, 5>& s);
SignedGraph b546(const std::array<Sign, 5>& s);
SignedGraph b636(const std::array<Sign, 5>& s);
SignedGraph b666(const std::array<Sign, 5>& s);
}  // namespace cores

}  // namespace signet
