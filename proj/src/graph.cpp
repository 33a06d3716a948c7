#include "signet/graph.hpp"

#include <algorithm>

namespace signet {

SignedGraph SignedGraph::from_edge_list(int n, const std::vector<SignedEdge>& edges) {
  if (n < 0) throw GraphError("vertex count must be non-negative");
  SignedGraph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (const auto& e : edges) {
    int u = e.u, v = e.v;
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    g.edges_.push_back({u, v, e.sign});
  }
  std::sort(g.edges_.begin(), g.edges_.end(),
            [](const SignedEdge& a, const SignedEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  for (size_t i = 1; i < g.edges_.size(); ++i) {
    if (g.edges_[i].u == g.edges_[i - 1].u && g.edges_[i].v == g.edges_[i - 1].v)
      throw GraphError("duplicate edge (" + std::to_string(g.edges_[i].u) + "," +
                       std::to_string(g.edges_[i].v) + ")");
  }
  g.build_index();
  return g;
}

void SignedGraph::build_index() {
  adj_.assign(n_, {});
  sign_mat_.assign(static_cast<size_t>(n_) * n_, 0);
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    sign_mat_[static_cast<size_t>(e.u) * n_ + e.v] = static_cast<signed char>(e.sign.value());
    sign_mat_[static_cast<size_t>(e.v) * n_ + e.u] = static_cast<signed char>(e.sign.value());
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool SignedGraph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  return sign_mat_[static_cast<size_t>(u) * n_ + v] != 0;
}

Sign SignedGraph::sign(int u, int v) const {
  if (!has_edge(u, v)) throw GraphError("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  return Sign::of(sign_mat_[static_cast<size_t>(u) * n_ + v]);
}

std::vector<int> SignedGraph::component_labels() const {
  std::vector<int> label(n_, -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n_; ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj_[v]) {
        if (label[w] == -1) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

int SignedGraph::component_count() const {
  auto labels = component_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool SignedGraph::is_connected() const { return component_count() <= 1; }

std::vector<int> SignedGraph::pendant_vertices() const {
  std::vector<int> r;
  for (int v = 0; v < n_; ++v)
    if (degree(v) == 1) r.push_back(v);
  return r;
}

SignedGraph SignedGraph::induced_subgraph(const std::vector<int>& keep,
                                          std::vector<int>* old_to_new) const {
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> map(n_, -1);
  for (size_t i = 0; i < sorted.size(); ++i) {
    int v = sorted[i];
    if (v < 0 || v >= n_) throw GraphError("induced subgraph: vertex out of range");
    map[v] = static_cast<int>(i);
  }
  std::vector<SignedEdge> sub;
  for (const auto& e : edges_)
    if (map[e.u] != -1 && map[e.v] != -1) sub.push_back({map[e.u], map[e.v], e.sign});
  if (old_to_new) *old_to_new = map;
  return from_edge_list(static_cast<int>(sorted.size()), sub);
}

SignedGraph SignedGraph::with_signs(const std::vector<Sign>& edge_signs) const {
  if (edge_signs.size() != edges_.size()) throw GraphError("with_signs: size mismatch");
  std::vector<SignedEdge> es = edges_;
  for (size_t i = 0; i < es.size(); ++i) es[i].sign = edge_signs[i];
  return from_edge_list(n_, es);
}

SignedGraph k_join(const SignedGraph& g1, int u, const SignedGraph& g2,
                   const std::vector<int>& targets, const std::vector<Sign>& signs) {
  if (u < 0 || u >= g1.vertex_count()) throw GraphError("k_join: join vertex out of range");
  if (targets.empty() || targets.size() > static_cast<size_t>(g2.vertex_count()))
    throw GraphError("k_join: k out of range");
  if (signs.size() != targets.size()) throw GraphError("k_join: sign count mismatch");
  {
    auto t = targets;
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end()) throw GraphError("k_join: duplicate target");
  }
  const int off = g1.vertex_count();
  std::vector<SignedEdge> es = g1.edges();
  for (const auto& e : g2.edges()) es.push_back({e.u + off, e.v + off, e.sign});
  for (size_t i = 0; i < targets.size(); ++i) {
    int t = targets[i];
    if (t < 0 || t >= g2.vertex_count()) throw GraphError("k_join: target out of range");
    es.push_back({u, t + off, signs[i]});
  }
  return SignedGraph::from_edge_list(off + g2.vertex_count(), es);
}

}  // namespace signet
