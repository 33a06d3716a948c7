#include "signet/congruence.hpp"

#include <algorithm>

namespace signet {

InertiaTriple CongruenceResult::inertia_from_pivots() const {
  InertiaTriple t;
  for (const auto& p : pivots) {
    switch (p.kind) {
      case PivotBlock::Kind::diagonal:
        (p.value.signum() > 0 ? t.i_plus : t.i_minus) += 1;
        break;
      case PivotBlock::Kind::off_diagonal:
        t.i_plus += 1;
        t.i_minus += 1;
        break;
      case PivotBlock::Kind::zero_row:
        t.nullity += 1;
        break;
    }
  }
  return t;
}

RationalSymmetricMatrix adjacency_matrix(const SignedGraph& g) {
  RationalSymmetricMatrix m(g.vertex_count());
  for (const auto& e : g.edges()) m.set(e.u, e.v, Rational(e.sign.value()));
  return m;
}

namespace {

class Eliminator {
 public:
  explicit Eliminator(const RationalSymmetricMatrix& m) : n_(m.order()), a_(static_cast<size_t>(n_) * n_) {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) a_[idx(i, j)] = m.at(i, j);
    active_.resize(n_);
    for (int i = 0; i < n_; ++i) active_[i] = i;
  }

  CongruenceResult run() {
    CongruenceResult res;
    res.det = Rational(1);
    bool singular = false;
    while (!active_.empty()) {
      int p = best_diagonal();
      if (p >= 0) {
        Rational d = at(p, p);
        for (int q : active_)
          if (q != p && !at(q, p).is_zero()) add_multiple(q, p, at(q, p) / d);
        res.pivots.push_back({PivotBlock::Kind::diagonal, d});
        res.det *= d;
        drop(p);
        continue;
      }
      auto [i, j] = first_off_diagonal();
      if (i < 0) {
        // everything left is a zero row
        for (size_t k = 0; k < active_.size(); ++k)
          res.pivots.push_back({PivotBlock::Kind::zero_row, Rational()});
        singular = !active_.empty();
        break;
      }
      Rational c = at(i, j);
      for (int q : active_) {
        if (q == i || q == j) continue;
        // zero column j first, then column i; the first op leaves at(q,i) intact
        if (!at(q, j).is_zero()) add_multiple(q, i, at(q, j) / c);
        if (!at(q, i).is_zero()) add_multiple(q, j, at(q, i) / c);
      }
      res.pivots.push_back({PivotBlock::Kind::off_diagonal, c});
      res.det *= -(c * c);
      drop(i);
      drop(j);
    }
    if (singular) res.det = Rational(0);
    res.inertia = res.inertia_from_pivots();
    return res;
  }

 private:
  size_t idx(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }
  const Rational& at(int i, int j) const { return a_[idx(i, j)]; }

  // row_q -= f*row_p and col_q -= f*col_p (congruence by a unit matrix)
  void add_multiple(int q, int p, const Rational& f) {
    for (int r = 0; r < n_; ++r) a_[idx(q, r)] -= f * a_[idx(p, r)];
    for (int r = 0; r < n_; ++r) a_[idx(r, q)] -= f * a_[idx(r, p)];
  }

  int best_diagonal() const {
    int best = -1;
    for (int i : active_) {
      const Rational& d = at(i, i);
      if (d.is_zero()) continue;
      if (best < 0 || Rational::compare_abs(d, at(best, best)) > 0) best = i;
    }
    return best;
  }

  std::pair<int, int> first_off_diagonal() const {
    for (size_t a = 0; a < active_.size(); ++a)
      for (size_t b = a + 1; b < active_.size(); ++b)
        if (!at(active_[a], active_[b]).is_zero()) return {active_[a], active_[b]};
    return {-1, -1};
  }

  void drop(int v) { active_.erase(std::find(active_.begin(), active_.end(), v)); }

  int n_;
  std::vector<Rational> a_;
  std::vector<int> active_;
};

}  // namespace

CongruenceResult congruent_diagonalize(const RationalSymmetricMatrix& m) {
  return Eliminator(m).run();
}

InertiaTriple inertia(const SignedGraph& g) {
  return congruent_diagonalize(adjacency_matrix(g)).inertia;
}

Rational determinant_exact(const RationalSymmetricMatrix& m) {
  return congruent_diagonalize(m).det;
}

}  // namespace signet
