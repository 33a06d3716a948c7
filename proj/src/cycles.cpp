#include "signet/cycles.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace signet {

namespace {

std::vector<int> canonical_rotation(const std::vector<int>& cyc) {
  const int n = static_cast<int>(cyc.size());
  int start = static_cast<int>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
  std::vector<int> fwd(n), bwd(n);
  for (int i = 0; i < n; ++i) {
    fwd[i] = cyc[(start + i) % n];
    bwd[i] = cyc[(start - i % n + n) % n];
  }
  return std::min(fwd, bwd);
}

// distances from src with edge (eu,ev) removed
std::vector<int> bfs_without_edge(const SignedGraph& g, int src, int eu, int ev) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if ((v == eu && w == ev) || (v == ev && w == eu)) continue;
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

void collect_shortest_paths(const SignedGraph& g, const std::vector<int>& dist, int v,
                            int eu, int ev, std::vector<int>& path,
                            std::vector<std::vector<int>>& out) {
  path.push_back(v);
  if (dist[v] == 0) {
    out.emplace_back(path.rbegin(), path.rend());
  } else {
    for (int w : g.neighbors(v)) {
      if ((v == eu && w == ev) || (v == ev && w == eu)) continue;
      if (dist[w] == dist[v] - 1) collect_shortest_paths(g, dist, w, eu, ev, path, out);
    }
  }
  path.pop_back();
}

}  // namespace

CycleWitness make_cycle_witness(const SignedGraph& g, std::vector<int> vertices) {
  if (vertices.size() < 3) throw GraphError("cycle witness: too short");
  CycleWitness c;
  c.vertices = canonical_rotation(vertices);
  Sign s = Sign::plus();
  const int n = static_cast<int>(c.vertices.size());
  for (int i = 0; i < n; ++i) s = s * g.sign(c.vertices[i], c.vertices[(i + 1) % n]);
  c.sign = s;
  return c;
}

bool is_cycle_of(const SignedGraph& g, const CycleWitness& c) {
  const int n = static_cast<int>(c.vertices.size());
  if (n < 3) return false;
  std::set<int> seen(c.vertices.begin(), c.vertices.end());
  if (static_cast<int>(seen.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    if (!g.has_edge(c.vertices[i], c.vertices[(i + 1) % n])) return false;
  return true;
}

GirthResult girth_and_cycles(const SignedGraph& g) {
  GirthResult res;
  int best = -1;
  for (const auto& e : g.edges()) {
    auto dist = bfs_without_edge(g, e.u, e.u, e.v);
    if (dist[e.v] == -1) continue;
    int len = dist[e.v] + 1;
    if (best == -1 || len < best) best = len;
  }
  if (best == -1) return res;
  res.girth = best;

  std::set<CycleWitness> cycles;
  for (const auto& e : g.edges()) {
    auto dist = bfs_without_edge(g, e.u, e.u, e.v);
    if (dist[e.v] != best - 1) continue;
    std::vector<std::vector<int>> paths;
    std::vector<int> scratch;
    collect_shortest_paths(g, dist, e.v, e.u, e.v, scratch, paths);
    for (auto& p : paths) cycles.insert(make_cycle_witness(g, p));
  }
  res.shortest_cycles.assign(cycles.begin(), cycles.end());
  return res;
}

DistanceLayers distance_layers(const SignedGraph& g, const CycleWitness& c) {
  if (!is_cycle_of(g, c)) throw GraphError("distance_layers: not a cycle of the graph");
  DistanceLayers out;
  out.base = c;
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  for (int v : c.vertices) {
    dist[v] = 0;
    q.push(v);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  int maxd = 0;
  for (int v = 0; v < g.vertex_count(); ++v) maxd = std::max(maxd, dist[v]);
  out.layers.assign(maxd, {});
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (dist[v] == -1)
      out.unreachable.push_back(v);
    else if (dist[v] >= 1)
      out.layers[dist[v] - 1].push_back(v);
  }
  return out;
}

}  // namespace signet
