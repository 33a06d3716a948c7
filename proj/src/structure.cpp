#include "signet/structure.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace signet {

int StarDecomposition::even_segment_count() const {
  return static_cast<int>(std::count_if(segments.begin(), segments.end(),
                                        [](int l) { return l % 2 == 0; }));
}

CanonicalCheck canonical_unicyclic_check(const SignedGraph& g) {
  CanonicalCheck out;
  if (!g.is_connected()) {
    out.reason = "not connected";
    return out;
  }
  if (g.edge_count() != g.vertex_count()) {
    out.reason = "not unicyclic";
    return out;
  }
  auto gr = girth_and_cycles(g);
  const CycleWitness& cyc = gr.shortest_cycles.front();
  const int glen = cyc.length();
  if (glen == g.vertex_count()) {
    out.reason = "pure cycle";
    return out;
  }

  std::vector<bool> on_cycle(g.vertex_count(), false);
  for (int v : cyc.vertices) on_cycle[v] = true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (on_cycle[v]) continue;
    int cycle_neighbors = 0;
    for (int w : g.neighbors(v)) {
      if (on_cycle[w])
        ++cycle_neighbors;
      else {
        out.reason = g.degree(v) == 1 ? "vertex at distance >= 2 from the cycle"
                                      : "N_1 is not independent";
        return out;
      }
    }
    if (cycle_neighbors != 1) {
      out.reason = "pendant attached to more than one cycle vertex";
      return out;
    }
  }

  StarDecomposition& d = out.decomposition;
  d.cycle = cyc;
  std::vector<std::vector<int>> pendants(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (on_cycle[v]) continue;
    pendants[g.neighbors(v)[0]].push_back(v);
  }
  // walk the cycle starting at the first major vertex in witness order
  int first_major = -1;
  for (int i = 0; i < glen; ++i) {
    if (!pendants[cyc.vertices[i]].empty()) {
      first_major = i;
      break;
    }
  }
  int run = 0;
  for (int step = 0; step < glen; ++step) {
    int v = cyc.vertices[(first_major + step) % glen];
    if (!pendants[v].empty()) {
      if (step > 0) d.segments.push_back(run);
      run = 0;
      d.stars.emplace_back(v, pendants[v]);
    } else {
      ++run;
    }
  }
  d.segments.push_back(run);
  out.ok = true;
  return out;
}

bool is_canonical_signed_unicyclic(const SignedGraph& g) {
  if (!g.is_connected() || g.edge_count() != g.vertex_count()) return false;
  auto gr = girth_and_cycles(g);
  if (gr.shortest_cycles.front().length() == g.vertex_count()) return true;  // pure cycle
  return canonical_unicyclic_check(g).ok;
}

PendantReduction pendant_reduce(const SignedGraph& g) {
  PendantReduction out{g, 0};
  for (;;) {
    auto pendants = out.reduced.pendant_vertices();
    if (pendants.empty()) return out;
    int u = pendants.front();
    int v = out.reduced.neighbors(u)[0];
    std::vector<int> keep;
    for (int w = 0; w < out.reduced.vertex_count(); ++w)
      if (w != u && w != v) keep.push_back(w);
    out.reduced = out.reduced.induced_subgraph(keep);
    out.count += 1;
  }
}

namespace {

// maximum bipartite matching, left side indexed over `left_adj`
int max_matching(const std::vector<std::vector<int>>& left_adj, int right_size) {
  std::vector<int> match_right(right_size, -1);
  int matched = 0;
  for (size_t s = 0; s < left_adj.size(); ++s) {
    std::vector<bool> visited(right_size, false);
    std::function<bool(int)> try_augment = [&](int l) -> bool {
      for (int r : left_adj[l]) {
        if (visited[r]) continue;
        visited[r] = true;
        if (match_right[r] == -1 || try_augment(match_right[r])) {
          match_right[r] = l;
          return true;
        }
      }
      return false;
    };
    if (try_augment(static_cast<int>(s))) ++matched;
  }
  return matched;
}

}  // namespace

FanCheck fan_bound_check(const SignedGraph& g, const CycleWitness& c, int x, int l) {
  if (l != 1 && l != 2)
    throw std::invalid_argument("fan_bound_check: only lengths 1 and 2 are supported");
  if (!is_cycle_of(g, c)) throw GraphError("fan_bound_check: not a cycle of the graph");
  std::set<int> on_cycle(c.vertices.begin(), c.vertices.end());
  if (on_cycle.count(x)) throw GraphError("fan_bound_check: x lies on the cycle");

  FanCheck out;
  if (l == 1) {
    for (int w : g.neighbors(x))
      if (on_cycle.count(w)) ++out.k;
  } else {
    // internal vertices must be distinct and off the cycle; terminals distinct
    std::vector<int> mids, terminals(c.vertices.begin(), c.vertices.end());
    for (int w : g.neighbors(x))
      if (!on_cycle.count(w)) mids.push_back(w);
    std::vector<std::vector<int>> adj(mids.size());
    for (size_t i = 0; i < mids.size(); ++i) {
      for (int y : g.neighbors(mids[i])) {
        auto it = std::find(terminals.begin(), terminals.end(), y);
        if (it != terminals.end()) adj[i].push_back(static_cast<int>(it - terminals.begin()));
      }
    }
    out.k = max_matching(adj, static_cast<int>(terminals.size()));
  }
  if (out.k > 0) {
    const int girth = c.length();
    out.inequality_holds = girth / out.k + 2 * l >= girth;
  }
  return out;
}

}  // namespace signet
