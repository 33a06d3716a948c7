#pragma once

#include <vector>

#include "signet/graph.hpp"
#include "signet/rational.hpp"

namespace signet {

struct InertiaTriple {
  int i_plus = 0;
  int i_minus = 0;
  int nullity = 0;

  int order() const { return i_plus + i_minus + nullity; }

  friend bool operator==(const InertiaTriple& a, const InertiaTriple& b) {
    return a.i_plus == b.i_plus && a.i_minus == b.i_minus && a.nullity == b.nullity;
  }
};

// Dense symmetric matrix over exact rationals.
class RationalSymmetricMatrix {
 public:
  RationalSymmetricMatrix() = default;
  explicit RationalSymmetricMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

  int order() const { return n_; }

  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  // Writes both (i,j) and (j,i).
  void set(int i, int j, Rational v) {
    a_[static_cast<size_t>(i) * n_ + j] = v;
    a_[static_cast<size_t>(j) * n_ + i] = std::move(v);
  }

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

struct PivotBlock {
  enum class Kind {
    diagonal,      // 1x1 block with the stored value
    off_diagonal,  // 2x2 block [[0,c],[c,0]] with c = value
    zero_row,      // fully zero row/column
  };
  Kind kind = Kind::zero_row;
  Rational value;
};

// Block-diagonal congruent form of a symmetric matrix. Only unit congruence
// operations are applied, so det equals the product of block determinants
// (a 2x2 block contributes -c^2).
struct CongruenceResult {
  std::vector<PivotBlock> pivots;
  InertiaTriple inertia;
  Rational det;

  // Recomputes the inertia from the pivot list alone.
  InertiaTriple inertia_from_pivots() const;
};

RationalSymmetricMatrix adjacency_matrix(const SignedGraph& g);

// Symmetric congruence elimination. Prefers a nonzero diagonal pivot of
// largest absolute value (lowest index on ties); when the active diagonal is
// all zero it takes a 2x2 pivot on the first nonzero off-diagonal entry.
CongruenceResult congruent_diagonalize(const RationalSymmetricMatrix& m);

InertiaTriple inertia(const SignedGraph& g);
Rational determinant_exact(const RationalSymmetricMatrix& m);

}  // namespace signet
