#include "signet/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

namespace signet {

namespace {

// Exact memoized encoding of rooted trees: equal ids iff isomorphic as
// rooted trees. Ids are only comparable within one coder instance.
class TreeCoder {
 public:
  int encode(std::vector<int> child_codes) {
    std::sort(child_codes.begin(), child_codes.end());
    auto [it, inserted] = memo_.try_emplace(std::move(child_codes), next_);
    if (inserted) ++next_;
    return it->second;
  }

 private:
  std::map<std::vector<int>, int> memo_;
  int next_ = 0;
};

int rooted_code(const SignedGraph& g, int v, int parent, const std::vector<bool>& blocked,
                TreeCoder& coder) {
  std::vector<int> codes;
  for (int w : g.neighbors(v)) {
    if (w == parent || blocked[w]) continue;
    codes.push_back(rooted_code(g, w, v, blocked, coder));
  }
  return coder.encode(std::move(codes));
}

// Canonical code of a whole forest: per component the minimum rooted code
// over all roots, then the sorted multiset of component codes.
std::vector<int> forest_code(const SignedGraph& g, TreeCoder& coder) {
  std::vector<bool> none(g.vertex_count(), false);
  auto labels = g.component_labels();
  int comp_count = g.component_count();
  std::vector<int> best(comp_count, -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    int code = rooted_code(g, v, -1, none, coder);
    int c = labels[v];
    if (best[c] == -1 || code < best[c]) best[c] = code;
  }
  std::sort(best.begin(), best.end());
  return best;
}

struct Core {
  std::vector<int> vertices;        // ascending original ids
  std::vector<bool> in_core;        // size n
  std::vector<int> index_of;        // original id -> core index, -1 otherwise
  std::vector<std::vector<int>> adj;  // core-index adjacency
  std::vector<int> degree;          // degree within the core
  std::vector<int> forest;          // decoration: rooted code of dangling trees
};

Core build_core(const SignedGraph& g, const std::vector<int>& core_vertices, TreeCoder& coder) {
  Core c;
  c.vertices = core_vertices;
  c.in_core.assign(g.vertex_count(), false);
  c.index_of.assign(g.vertex_count(), -1);
  for (size_t i = 0; i < core_vertices.size(); ++i) {
    c.in_core[core_vertices[i]] = true;
    c.index_of[core_vertices[i]] = static_cast<int>(i);
  }
  c.adj.resize(core_vertices.size());
  c.degree.assign(core_vertices.size(), 0);
  for (size_t i = 0; i < core_vertices.size(); ++i) {
    for (int w : g.neighbors(core_vertices[i]))
      if (c.in_core[w]) c.adj[i].push_back(c.index_of[w]);
    c.degree[i] = static_cast<int>(c.adj[i].size());
  }
  c.forest.resize(core_vertices.size());
  for (size_t i = 0; i < core_vertices.size(); ++i)
    c.forest[i] = rooted_code(g, core_vertices[i], -1, c.in_core, coder);
  return c;
}

// fundamental cycles of the core w.r.t. a BFS forest, as original-id paths
std::vector<std::vector<int>> core_cycle_basis(const SignedGraph& g, const Core& c) {
  const int k = static_cast<int>(c.vertices.size());
  std::vector<int> parent(k, -1), depth(k, -1);
  std::vector<std::pair<int, int>> cotree;
  for (int root = 0; root < k; ++root) {
    if (depth[root] != -1) continue;
    depth[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : c.adj[v]) {
        if (depth[w] == -1) {
          depth[w] = depth[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (w != parent[v] && v < w) {
          cotree.emplace_back(v, w);
        }
      }
    }
  }
  std::vector<std::vector<int>> basis;
  for (auto [u, v] : cotree) {
    std::vector<int> up, vp;
    int a = u, b = v;
    while (depth[a] > depth[b]) up.push_back(a), a = parent[a];
    while (depth[b] > depth[a]) vp.push_back(b), b = parent[b];
    while (a != b) {
      up.push_back(a);
      vp.push_back(b);
      a = parent[a];
      b = parent[b];
    }
    up.push_back(a);
    std::reverse(vp.begin(), vp.end());
    up.insert(up.end(), vp.begin(), vp.end());
    for (int& x : up) x = c.vertices[x];
    basis.push_back(std::move(up));
  }
  return basis;
}

Sign cycle_sign(const SignedGraph& g, const std::vector<int>& cyc) {
  Sign s = Sign::plus();
  for (size_t i = 0; i < cyc.size(); ++i) s = s * g.sign(cyc[i], cyc[(i + 1) % cyc.size()]);
  return s;
}

// Backtracking search for a core isomorphism respecting degree, dangling
// forest decoration and adjacency. `accept` sees the full map (core index of
// a -> core index of b) and may reject to request further candidates.
template <typename Accept>
bool core_iso_search(const Core& a, const Core& b, Accept accept) {
  const int k = static_cast<int>(a.vertices.size());
  if (static_cast<int>(b.vertices.size()) != k) return false;

  // quick reject on invariant multisets
  auto key = [](const Core& c) {
    std::vector<std::pair<int, int>> v;
    for (size_t i = 0; i < c.vertices.size(); ++i) v.emplace_back(c.degree[i], c.forest[i]);
    std::sort(v.begin(), v.end());
    return v;
  };
  if (key(a) != key(b)) return false;

  // order: BFS so that each vertex after the first touches a mapped one
  std::vector<int> order;
  std::vector<bool> seen(k, false);
  for (int root = 0; root < k; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      order.push_back(v);
      for (int w : a.adj[v])
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
    }
  }

  std::vector<int> map_ab(k, -1), map_ba(k, -1);
  std::function<bool(int)> place = [&](int pos) -> bool {
    if (pos == k) return accept(map_ab);
    int v = order[pos];
    for (int img = 0; img < k; ++img) {
      if (map_ba[img] != -1) continue;
      if (a.degree[v] != b.degree[img] || a.forest[v] != b.forest[img]) continue;
      bool ok = true;
      for (int w : a.adj[v]) {
        if (map_ab[w] == -1) continue;
        if (std::find(b.adj[img].begin(), b.adj[img].end(), map_ab[w]) == b.adj[img].end()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        // mapped neighbors counted both ways to forbid extra edges in b
        int mapped_a = 0;
        for (int w : a.adj[v]) mapped_a += map_ab[w] != -1;
        int mapped_b = 0;
        for (int w : b.adj[img]) mapped_b += map_ba[w] != -1;
        if (mapped_a != mapped_b) ok = false;
      }
      if (!ok) continue;
      map_ab[v] = img;
      map_ba[img] = v;
      if (place(pos + 1)) return true;
      map_ab[v] = -1;
      map_ba[img] = -1;
    }
    return false;
  };
  return place(0);
}

bool connected_isomorphic(const SignedGraph& a, const SignedGraph& b, bool check_signs) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto core_va = two_core(a);
  auto core_vb = two_core(b);
  if (core_va.size() != core_vb.size()) return false;

  TreeCoder coder;
  if (core_va.empty()) return forest_code(a, coder) == forest_code(b, coder);

  Core ca = build_core(a, core_va, coder);
  Core cb = build_core(b, core_vb, coder);
  auto basis = core_cycle_basis(a, ca);

  return core_iso_search(ca, cb, [&](const std::vector<int>& map_ab) {
    if (!check_signs) return true;
    for (const auto& cyc : basis) {
      std::vector<int> image;
      image.reserve(cyc.size());
      for (int v : cyc) image.push_back(cb.vertices[map_ab[ca.index_of[v]]]);
      if (!(cycle_sign(a, cyc) == cycle_sign(b, image))) return false;
    }
    return true;
  });
}

bool isomorphic_impl(const SignedGraph& a, const SignedGraph& b, bool check_signs) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto la = a.component_labels();
  auto lb = b.component_labels();
  int ca = a.component_count(), cb = b.component_count();
  if (ca != cb) return false;
  if (ca <= 1) return connected_isomorphic(a, b, check_signs);

  std::vector<SignedGraph> comps_a(ca), comps_b(cb);
  for (int c = 0; c < ca; ++c) {
    std::vector<int> keep_a, keep_b;
    for (int v = 0; v < a.vertex_count(); ++v)
      if (la[v] == c) keep_a.push_back(v);
    for (int v = 0; v < b.vertex_count(); ++v)
      if (lb[v] == c) keep_b.push_back(v);
    comps_a[c] = a.induced_subgraph(keep_a);
    comps_b[c] = b.induced_subgraph(keep_b);
  }
  std::vector<bool> used(cb, false);
  std::function<bool(int)> match = [&](int i) -> bool {
    if (i == ca) return true;
    for (int j = 0; j < cb; ++j) {
      if (used[j]) continue;
      if (comps_a[i].vertex_count() != comps_b[j].vertex_count()) continue;
      if (!connected_isomorphic(comps_a[i], comps_b[j], check_signs)) continue;
      used[j] = true;
      if (match(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return match(0);
}

// ---- canonical form via refinement + individualization ----

int refine(const SignedGraph& g, std::vector<int>& color) {
  const int n = g.vertex_count();
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> keys(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> k;
      k.push_back(color[v]);
      std::vector<int> nb;
      for (int w : g.neighbors(v)) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      k.insert(k.end(), nb.begin(), nb.end());
      keys[v] = {std::move(k), v};
    }
    std::vector<std::vector<int>> distinct;
    for (auto& [k, v] : keys) distinct.push_back(k);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), keys[v].first) -
                                 distinct.begin());
    if (next == color) return static_cast<int>(distinct.size());
    color = std::move(next);
  }
}

std::vector<uint8_t> encode_under(const SignedGraph& g, const std::vector<int>& color) {
  const int n = g.vertex_count();
  std::vector<int> pos(n);
  for (int v = 0; v < n; ++v) pos[color[v]] = v;  // color is a permutation
  std::vector<uint8_t> out;
  out.push_back(static_cast<uint8_t>(n));
  uint8_t cur = 0;
  int bits = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      cur = static_cast<uint8_t>((cur << 1) | (g.has_edge(pos[i], pos[j]) ? 1 : 0));
      if (++bits == 8) {
        out.push_back(cur);
        cur = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<uint8_t>(cur << (8 - bits)));
  return out;
}

void canon_recurse(const SignedGraph& g, std::vector<int> color, std::vector<uint8_t>& best) {
  const int n = g.vertex_count();
  int classes = refine(g, color);
  if (classes == n) {
    auto s = encode_under(g, color);
    if (best.empty() || s < best) best = s;
    return;
  }
  // first non-singleton color class
  std::vector<int> count(classes, 0);
  for (int v = 0; v < n; ++v) count[color[v]]++;
  int target = 0;
  while (count[target] < 2) ++target;
  for (int v = 0; v < n; ++v) {
    if (color[v] != target) continue;
    std::vector<int> next(n);
    for (int w = 0; w < n; ++w) next[w] = 2 * color[w] + (w == v ? 0 : 1);
    canon_recurse(g, std::move(next), best);
  }
}

}  // namespace

std::vector<int> two_core(const SignedGraph& g) {
  std::vector<int> deg(g.vertex_count());
  std::vector<bool> removed(g.vertex_count(), false);
  std::queue<int> q;
  for (int v = 0; v < g.vertex_count(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) {
      removed[v] = true;
      q.push(v);
    }
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (removed[w]) continue;
      if (--deg[w] <= 1) {
        removed[w] = true;
        q.push(w);
      }
    }
  }
  std::vector<int> core;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!removed[v]) core.push_back(v);
  return core;
}

std::vector<uint8_t> canonical_form(const SignedGraph& g) {
  std::vector<uint8_t> best;
  canon_recurse(g, std::vector<int>(g.vertex_count(), 0), best);
  if (best.empty()) best.push_back(0);  // empty graph
  return best;
}

bool underlying_isomorphic(const SignedGraph& a, const SignedGraph& b) {
  return isomorphic_impl(a, b, /*check_signs=*/false);
}

bool signed_isomorphic(const SignedGraph& a, const SignedGraph& b) {
  return isomorphic_impl(a, b, /*check_signs=*/true);
}

}  // namespace signet
