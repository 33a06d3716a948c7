#include "signet/switching.hpp"

#include <algorithm>
#include <queue>

namespace signet {

SignedGraph apply_switching(const SignedGraph& g, const SwitchingFunction& theta) {
  if (theta.size() != g.vertex_count()) throw GraphError("apply_switching: size mismatch");
  std::vector<Sign> signs;
  signs.reserve(g.edges().size());
  for (const auto& e : g.edges())
    signs.push_back(theta.vertex_signs[e.u] * e.sign * theta.vertex_signs[e.v]);
  return g.with_signs(signs);
}

BalanceResult balance(const SignedGraph& g) {
  const int n = g.vertex_count();
  BalanceResult res;
  res.theta = SwitchingFunction::identity(n);
  std::vector<int> parent(n, -1), depth(n, -1);

  for (int root = 0; root < n; ++root) {
    if (depth[root] != -1) continue;
    depth[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (depth[w] != -1) continue;
        depth[w] = depth[v] + 1;
        parent[w] = v;
        res.theta.vertex_signs[w] = res.theta.vertex_signs[v] * g.sign(v, w);
        q.push(w);
      }
    }
  }

  for (const auto& e : g.edges()) {
    if (parent[e.v] == e.u || parent[e.u] == e.v) continue;  // tree edge
    Sign switched = res.theta.vertex_signs[e.u] * e.sign * res.theta.vertex_signs[e.v];
    if (switched.is_positive()) continue;
    // negative co-tree edge: tree path u..lca..v plus the edge is a negative cycle
    std::vector<int> up, vp;
    int a = e.u, b = e.v;
    while (depth[a] > depth[b]) {
      up.push_back(a);
      a = parent[a];
    }
    while (depth[b] > depth[a]) {
      vp.push_back(b);
      b = parent[b];
    }
    while (a != b) {
      up.push_back(a);
      vp.push_back(b);
      a = parent[a];
      b = parent[b];
    }
    up.push_back(a);
    std::reverse(vp.begin(), vp.end());
    up.insert(up.end(), vp.begin(), vp.end());
    res.balanced = false;
    res.witness = make_cycle_witness(g, up);
    return res;
  }
  res.balanced = true;
  return res;
}

bool switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edges().size() != b.edges().size()) return false;
  for (size_t i = 0; i < a.edges().size(); ++i) {
    if (a.edges()[i].u != b.edges()[i].u || a.edges()[i].v != b.edges()[i].v) return false;
  }
  // same underlying labeled graph: equivalent iff the sign ratio is a cut
  std::vector<Sign> ratio;
  ratio.reserve(a.edges().size());
  for (size_t i = 0; i < a.edges().size(); ++i)
    ratio.push_back(a.edges()[i].sign * b.edges()[i].sign);
  return balance(a.with_signs(ratio)).balanced;
}

SignedGraph unicyclic_normal_form(const SignedGraph& g) {
  if (!g.is_connected() || g.edge_count() != g.vertex_count())
    throw GraphError("unicyclic_normal_form: graph is not connected unicyclic");
  BalanceResult bal = balance(g);
  if (bal.balanced) return apply_switching(g, bal.theta);

  auto gr = girth_and_cycles(g);
  const CycleWitness& cyc = gr.shortest_cycles.front();  // the unique cycle
  const int len = cyc.length();
  std::pair<int, int> neg_edge{g.vertex_count(), g.vertex_count()};
  for (int i = 0; i < len; ++i) {
    int u = cyc.vertices[i], v = cyc.vertices[(i + 1) % len];
    if (u > v) std::swap(u, v);
    neg_edge = std::min(neg_edge, {u, v});
  }

  // potentials over the spanning tree G - neg_edge
  SwitchingFunction theta = SwitchingFunction::identity(g.vertex_count());
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<int> q;
  seen[0] = true;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (seen[w]) continue;
      if ((v == neg_edge.first && w == neg_edge.second) || (v == neg_edge.second && w == neg_edge.first))
        continue;
      seen[w] = true;
      theta.vertex_signs[w] = theta.vertex_signs[v] * g.sign(v, w);
      q.push(w);
    }
  }
  return apply_switching(g, theta);
}

}  // namespace signet
