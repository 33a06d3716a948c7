#pragma once

#include <random>
#include <vector>

#include "signet/graph.hpp"

namespace signet::testutil {

inline SignedGraph cycle_graph(int n, bool balanced = true) {
  std::vector<SignedEdge> es;
  for (int i = 0; i < n; ++i)
    es.push_back({i, (i + 1) % n, Sign::plus()});
  if (!balanced) es[0].sign = Sign::minus();
  return SignedGraph::from_edge_list(n, es);
}

inline SignedGraph path_graph(int n, const std::vector<Sign>& signs = {}) {
  std::vector<SignedEdge> es;
  for (int i = 0; i + 1 < n; ++i)
    es.push_back({i, i + 1, signs.empty() ? Sign::plus() : signs.at(i)});
  return SignedGraph::from_edge_list(n, es);
}

inline SignedGraph star_graph(int t) {
  std::vector<SignedEdge> es;
  for (int i = 1; i <= t; ++i) es.push_back({0, i, Sign::plus()});
  return SignedGraph::from_edge_list(t + 1, es);
}

inline Sign random_sign(std::mt19937_64& rng) {
  return (rng() & 1) ? Sign::plus() : Sign::minus();
}

inline SignedGraph random_tree(std::mt19937_64& rng, int n) {
  std::vector<SignedEdge> es;
  for (int v = 1; v < n; ++v)
    es.push_back({static_cast<int>(rng() % v), v, random_sign(rng)});
  return SignedGraph::from_edge_list(n, es);
}

inline SignedGraph random_unicyclic(std::mt19937_64& rng, int n, int cycle_len) {
  std::vector<SignedEdge> es;
  for (int i = 0; i < cycle_len; ++i)
    es.push_back({i, (i + 1) % cycle_len, random_sign(rng)});
  for (int v = cycle_len; v < n; ++v)
    es.push_back({static_cast<int>(rng() % v), v, random_sign(rng)});
  return SignedGraph::from_edge_list(n, es);
}

// Erdos-Renyi-ish signed graph; may be disconnected.
inline SignedGraph random_signed_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<SignedEdge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (std::uniform_real_distribution<double>(0, 1)(rng) < p)
        es.push_back({u, v, random_sign(rng)});
  return SignedGraph::from_edge_list(n, es);
}

}  // namespace signet::testutil
