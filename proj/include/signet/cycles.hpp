#pragma once

#include <optional>
#include <vector>

#include "signet/graph.hpp"

namespace signet {

// A simple cycle, stored in canonical traversal order: smallest vertex first,
// then the smaller of its two cycle neighbors. Equal cycles compare equal.
struct CycleWitness {
  std::vector<int> vertices;
  Sign sign;

  int length() const { return static_cast<int>(vertices.size()); }

  friend bool operator==(const CycleWitness& a, const CycleWitness& b) {
    return a.vertices == b.vertices;
  }
  friend bool operator<(const CycleWitness& a, const CycleWitness& b) {
    return a.vertices < b.vertices;
  }
};

// Canonicalizes a cyclic vertex sequence and computes its sign from g.
CycleWitness make_cycle_witness(const SignedGraph& g, std::vector<int> vertices);

bool is_cycle_of(const SignedGraph& g, const CycleWitness& c);

struct GirthResult {
  std::optional<int> girth;                  // empty for forests
  std::vector<CycleWitness> shortest_cycles; // every shortest cycle, sorted
};

// Girth and all shortest cycles, deduplicated up to rotation and reflection.
GirthResult girth_and_cycles(const SignedGraph& g);

// Vertices grouped by distance from a cycle: layers[r] holds the vertices at
// distance exactly r+1 (layer index 0 is N_1). The cycle itself is N_0.
struct DistanceLayers {
  CycleWitness base;
  std::vector<std::vector<int>> layers;
  std::vector<int> unreachable;

  std::vector<int> layer(int r) const {  // N_r, r >= 1
    if (r < 1 || r > static_cast<int>(layers.size())) return {};
    return layers[r - 1];
  }
};

DistanceLayers distance_layers(const SignedGraph& g, const CycleWitness& c);

}  // namespace signet
