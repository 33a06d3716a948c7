#pragma once

#include <functional>
#include <vector>

#include "signet/graph.hpp"

namespace signet {

// Exhaustive generation of connected underlying graphs up to isomorphism,
// girth within [girth_min, girth_max] (so forests are excluded from the
// output), cyclomatic number at most cyclomatic_max. Vertex-augmentation with
// canonical-form rejection; deterministic output order. Desk-scale bounds:
// n_max <= 12, cyclomatic_max <= 3.
std::vector<SignedGraph> enumerate_underlying(int n_max, int girth_min, int girth_max,
                                              int cyclomatic_max);

// One representative per switching class of the underlying graph, modulo
// automorphisms: spanning-tree edges fixed positive, co-tree edges range over
// sign vectors, deduplicated by signed isomorphism. Deterministic order.
std::vector<SignedGraph> enumerate_switching_classes(const SignedGraph& underlying);

}  // namespace signet
