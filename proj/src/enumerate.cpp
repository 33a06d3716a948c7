#include "signet/enumerate.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "signet/cycles.hpp"
#include "signet/isomorphism.hpp"

namespace signet {

namespace {

std::vector<std::vector<int>> all_pairs_distances(const SignedGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    d[s][s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v))
        if (d[s][w] == -1) {
          d[s][w] = d[s][v] + 1;
          q.push(w);
        }
    }
  }
  return d;
}

}  // namespace

std::vector<SignedGraph> enumerate_underlying(int n_max, int girth_min, int girth_max,
                                              int cyclomatic_max) {
  if (n_max < 1 || n_max > 12) throw std::invalid_argument("enumerate_underlying: n_max out of range");
  if (cyclomatic_max < 0 || cyclomatic_max > 3)
    throw std::invalid_argument("enumerate_underlying: cyclomatic_max out of range");
  if (girth_min < 3 || girth_max < girth_min)
    throw std::invalid_argument("enumerate_underlying: bad girth bounds");

  // intermediate levels: connected, no cycle shorter than girth_min,
  // cyclomatic number within bound
  std::map<std::vector<uint8_t>, SignedGraph> level;
  level.emplace(canonical_form(SignedGraph::from_edge_list(1, {})), SignedGraph::from_edge_list(1, {}));

  std::vector<SignedGraph> out;
  auto harvest = [&](const SignedGraph& g) {
    auto gr = girth_and_cycles(g);
    if (gr.girth && *gr.girth >= girth_min && *gr.girth <= girth_max) out.push_back(g);
  };

  for (int n = 2; n <= n_max; ++n) {
    std::map<std::vector<uint8_t>, SignedGraph> next;
    for (const auto& [key, g] : level) {
      const int base_n = g.vertex_count();
      const int base_cyc = g.edge_count() - base_n + 1;
      auto dist = all_pairs_distances(g);
      for (unsigned mask = 1; mask < (1u << base_n); ++mask) {
        const int extra = __builtin_popcount(mask);
        if (base_cyc + extra - 1 > cyclomatic_max) continue;
        std::vector<int> targets;
        for (int v = 0; v < base_n; ++v)
          if (mask & (1u << v)) targets.push_back(v);
        bool short_cycle = false;
        for (size_t i = 0; i < targets.size() && !short_cycle; ++i)
          for (size_t j = i + 1; j < targets.size() && !short_cycle; ++j)
            if (dist[targets[i]][targets[j]] + 2 < girth_min) short_cycle = true;
        if (short_cycle) continue;
        std::vector<SignedEdge> es = g.edges();
        for (int t : targets) es.push_back({t, base_n, Sign::plus()});
        auto h = SignedGraph::from_edge_list(base_n + 1, es);
        auto ck = canonical_form(h);
        next.emplace(std::move(ck), std::move(h));
      }
    }
    for (const auto& [key, g] : next) harvest(g);
    level = std::move(next);
  }
  return out;
}

std::vector<SignedGraph> enumerate_switching_classes(const SignedGraph& underlying) {
  const int n = underlying.vertex_count();
  // BFS spanning forest; remaining edges are the co-tree
  std::vector<bool> seen(n, false);
  std::vector<std::pair<int, int>> tree;
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : underlying.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          tree.emplace_back(std::min(v, w), std::max(v, w));
          q.push(w);
        }
    }
  }
  auto is_tree_edge = [&](const SignedEdge& e) {
    return std::find(tree.begin(), tree.end(), std::make_pair(e.u, e.v)) != tree.end();
  };
  std::vector<size_t> cotree;
  for (size_t i = 0; i < underlying.edges().size(); ++i)
    if (!is_tree_edge(underlying.edges()[i])) cotree.push_back(i);
  if (cotree.size() > 20)
    throw std::invalid_argument("enumerate_switching_classes: cycle space too large");

  std::vector<SignedGraph> reps;
  for (unsigned mask = 0; mask < (1u << cotree.size()); ++mask) {
    std::vector<Sign> signs(underlying.edges().size(), Sign::plus());
    for (size_t b = 0; b < cotree.size(); ++b)
      if (mask & (1u << b)) signs[cotree[b]] = Sign::minus();
    auto candidate = underlying.with_signs(signs);
    bool fresh = true;
    for (const auto& rep : reps)
      if (signed_isomorphic(rep, candidate)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(std::move(candidate));
  }
  return reps;
}

}  // namespace signet
