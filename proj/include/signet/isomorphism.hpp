#pragma once

#include <cstdint>
#include <vector>

#include "signet/graph.hpp"

namespace signet {

// Canonical adjacency encoding of the underlying (unsigned) graph, computed
// by refinement plus individualization. Two graphs have equal forms iff they
// are isomorphic. Intended for small graphs (enumeration dedup).
std::vector<uint8_t> canonical_form(const SignedGraph& g);

// Underlying-graph isomorphism, signs ignored.
bool underlying_isomorphic(const SignedGraph& a, const SignedGraph& b);

// Signed isomorphism up to switching: some underlying isomorphism maps every
// cycle of `a` to a cycle of `b` with the same sign. Pendant trees carry no
// sign information, so the search happens on the 2-cores.
bool signed_isomorphic(const SignedGraph& a, const SignedGraph& b);

// Vertices of the 2-core (repeatedly strip degree <= 1), ascending. Empty
// for forests.
std::vector<int> two_core(const SignedGraph& g);

}  // namespace signet
