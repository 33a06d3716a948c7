#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "signet/sign.hpp"

namespace signet {

struct SignedEdge {
  int u = 0;
  int v = 0;  // u < v after construction
  Sign sign;

  friend bool operator==(const SignedEdge& a, const SignedEdge& b) {
    return a.u == b.u && a.v == b.v && a.sign == b.sign;
  }
};

class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

// Undirected simple graph with a sign on every edge. Vertices are dense ids
// 0..n-1. Immutable after construction; cheap to copy and safe to share.
class SignedGraph {
 public:
  SignedGraph() = default;

  // Rejects self-loops, duplicate pairs and out-of-range endpoints.
  static SignedGraph from_edge_list(int n, const std::vector<SignedEdge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<SignedEdge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  bool has_edge(int u, int v) const;
  Sign sign(int u, int v) const;  // throws if absent

  bool is_connected() const;
  int component_count() const;
  std::vector<int> component_labels() const;  // label per vertex, 0-based

  std::vector<int> pendant_vertices() const;  // degree exactly 1, ascending

  // Graph induced on `keep` (ascending order imposed). Signs preserved.
  // old_to_new maps original ids to new ids, -1 for dropped vertices.
  SignedGraph induced_subgraph(const std::vector<int>& keep,
                               std::vector<int>* old_to_new = nullptr) const;

  // Same underlying graph with every edge sign flipped where exactly one
  // endpoint lies in the negative side of theta.
  SignedGraph with_signs(const std::vector<Sign>& edge_signs) const;

 private:
  int n_ = 0;
  std::vector<SignedEdge> edges_;        // sorted by (u, v)
  std::vector<std::vector<int>> adj_;    // sorted neighbor lists
  std::vector<signed char> sign_mat_;    // n*n: 0 absent, +-1 present

  void build_index();
};

// Disjoint union of g1 and g2 plus k new edges from `u` (in g1) to the given
// distinct vertices of g2. Vertices of g2 are shifted by n(g1).
SignedGraph k_join(const SignedGraph& g1, int u, const SignedGraph& g2,
                   const std::vector<int>& targets, const std::vector<Sign>& signs);

}  // namespace signet
