#pragma once

#include <optional>
#include <string>
#include <vector>

#include "signet/cycles.hpp"
#include "signet/families.hpp"
#include "signet/graph.hpp"
#include "signet/structure.hpp"

namespace signet {

// ceil(g/2) + 1, the negative inertia value the classifiers characterize
int target_negative_inertia(int girth);

// Value characterization for canonical signed unicyclic graphs (pure cycles
// included): holds iff the exact negative inertia equals ceil(g/2).
struct Thm11Result {
  bool holds = false;
  std::string evidence;
};
Thm11Result thm11_predicate(const SignedGraph& g);

// Characterization at ceil(g/2)+1 for canonical signed unicyclic graphs
// that are not pure cycles: odd girth needs exactly three even segments,
// even girth exactly two.
struct Thm31Result {
  bool holds = false;
  std::string evidence;
  StarDecomposition decomposition;
};
Thm31Result thm31_predicate(const SignedGraph& g);

// Layer profile of one balanced shortest cycle.
struct CycleView {
  CycleWitness cycle;
  std::vector<int> n1, n2, n3;
  bool deep() const { return !n3.empty(); }
};

struct HypothesisReport {
  bool connected = false;
  bool triangle_free = false;
  std::optional<int> girth;
  bool girth_2_3_mod4 = false;
  bool canonical_unicyclic = false;  // includes pure cycles
  bool n4_or_beyond = false;         // some vertex at distance >= 4 from a balanced shortest cycle
  std::vector<CycleView> balanced_views;

  bool common_ok() const {
    return connected && triangle_free && girth.has_value() && girth_2_3_mod4 &&
           !canonical_unicyclic && !balanced_views.empty();
  }
  bool qualifies_deep() const;     // claim 3.2: some balanced view with N3 nonempty
  bool qualifies_shallow() const;  // claim 3.3: some balanced view with N3 empty
};
HypothesisReport hypothesis_check(const SignedGraph& g);

enum class FamilyTag {
  none,
  gamma1,
  gamma2,
  gamma3,
  kjoin_deep,  // claim 3.2(3)
  b445_minus,
  gamma5,
  gamma6,
  gamma7,
  gamma8,
  gamma9,
  gamma10,
  gamma11,
  kjoin_shallow,  // claim 3.3(7)
};
std::string family_tag_name(FamilyTag tag);

struct Classification {
  FamilyTag tag = FamilyTag::none;
  std::string detail;
};

// Membership in the deep-attachment catalog (claim 3.2). Contract: for
// hypothesis-passing graphs, tag != none iff i- equals ceil(g/2)+1.
Classification thm32_classify(const SignedGraph& g);
Classification thm32_classify(const SignedGraph& g, const CycleView& view);

// Membership in the shallow catalog (claim 3.3), under the chosen reading of
// the family side conditions.
Classification thm33_classify(const SignedGraph& g,
                              FamilyConvention conv = FamilyConvention::proof);

}  // namespace signet
