#pragma once

#include <map>
#include <string>
#include <vector>

#include "signet/enumerate.hpp"
#include "signet/predicates.hpp"

namespace signet {

struct VerifyOptions {
  int girth_min = 6;
  int girth_max = 6;
  // 0 means the per-claim default: girth+6 for claim 3.1, girth+4 for 3.2/3.3
  int max_n = 0;
  int mult_max = 3;  // pendant multiplicity cap, claim 3.1 only
  int jobs = 1;
  enum class Reading { statement, proof, both } reading = Reading::both;
};

struct Counterexample {
  SignedGraph graph;
  int girth = 0;
  int i_minus = 0;
  bool tagged = false;
  std::string note;
};

struct EnumerationReport {
  std::string claim;
  VerifyOptions options;
  long long graphs_enumerated = 0;   // underlying graphs (3.2/3.3), configurations (3.1)
  long long classes_checked = 0;     // signed graphs examined
  long long hypothesis_passed = 0;
  long long target_hits = 0;         // hypothesis-passing with i- at the target
  long long structural_violations = 0;  // girth side conditions that must never fire
  std::map<std::pair<int, int>, long long> girth_iminus_counts;  // hypothesis-passing
  std::vector<Counterexample> counterexamples;  // under the selected reading
  std::map<std::string, long long> reading_counterexamples;  // claim 3.3, per reading
  std::string selected_reading;  // claim 3.3
  std::string bounds_note;
  double seconds = 0;

  bool ok() const { return counterexamples.empty() && structural_violations == 0; }
};

// Exhaustive desk-scale check of one claim's biconditional. Deterministic for
// fixed options regardless of the worker count.
EnumerationReport verify_theorem(const std::string& claim, const VerifyOptions& opts);

}  // namespace signet
