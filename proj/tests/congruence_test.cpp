#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "signet/congruence.hpp"
#include "signet/spectra.hpp"
#include "test_util.hpp"

using namespace signet;
namespace tu = signet::testutil;

TEST_CASE("adjacency matrix entries") {
  auto p2 = SignedGraph::from_edge_list(2, {{0, 1, Sign::plus()}});
  auto m = adjacency_matrix(p2);
  CHECK(m.at(0, 0) == Rational(0));
  CHECK(m.at(0, 1) == Rational(1));
  CHECK(m.at(1, 0) == Rational(1));

  auto p2n = SignedGraph::from_edge_list(2, {{0, 1, Sign::minus()}});
  CHECK(adjacency_matrix(p2n).at(0, 1) == Rational(-1));
}

TEST_CASE("zero matrix") {
  RationalSymmetricMatrix z(3);
  auto r = congruent_diagonalize(z);
  CHECK(r.inertia == InertiaTriple{0, 0, 3});
  CHECK(r.det == Rational(0));
}

TEST_CASE("known inertias") {
  CHECK(inertia(tu::cycle_graph(6)) == InertiaTriple{3, 3, 0});
  CHECK(inertia(tu::cycle_graph(4, /*balanced=*/false)) == InertiaTriple{2, 2, 0});
  CHECK(inertia(tu::path_graph(5)).i_minus == 2);
  CHECK(inertia(SignedGraph::from_edge_list(1, {})) == InertiaTriple{0, 0, 1});
}

TEST_CASE("determinants") {
  auto p2 = SignedGraph::from_edge_list(2, {{0, 1, Sign::plus()}});
  auto r = congruent_diagonalize(adjacency_matrix(p2));
  CHECK(r.det == Rational(-1));
  CHECK(r.inertia == InertiaTriple{1, 1, 0});

  CHECK(determinant_exact(adjacency_matrix(tu::path_graph(3))) == Rational(0));
  auto c4 = congruent_diagonalize(adjacency_matrix(tu::cycle_graph(4)));
  CHECK(c4.det == Rational(0));
  CHECK(c4.inertia.nullity == 2);
}

TEST_CASE("pivot reconstruction matches") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 100; ++iter) {
    auto g = tu::random_signed_graph(rng, 2 + static_cast<int>(rng() % 10), 0.5);
    auto r = congruent_diagonalize(adjacency_matrix(g));
    CHECK(r.inertia == r.inertia_from_pivots());
    CHECK(r.inertia.order() == g.vertex_count());
  }
}

TEST_CASE("float crosscheck agrees on 200 random graphs") {
  std::mt19937_64 rng(42);
  int checked = 0;
  while (checked < 200) {
    auto g = tu::random_signed_graph(rng, 2 + static_cast<int>(rng() % 11), 0.4);
    auto exact = inertia(g);
    auto fl = float_crosscheck(g);
    REQUIRE_FALSE(fl.ambiguous);
    CHECK(exact == fl.inertia);
    ++checked;
  }
}

TEST_CASE("determinant law: det = 0 iff singular, sign matches parity") {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 200; ++iter) {
    auto g = tu::random_signed_graph(rng, 2 + static_cast<int>(rng() % 10), 0.45);
    auto r = congruent_diagonalize(adjacency_matrix(g));
    CHECK((r.det.is_zero()) == (r.inertia.nullity > 0));
    if (r.inertia.nullity == 0) {
      int expected = r.inertia.i_minus % 2 == 0 ? 1 : -1;
      CHECK(r.det.signum() == expected);
    }
  }
}

TEST_CASE("inertia invariant under random rational congruence") {
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 50; ++iter) {
    int n = 2 + static_cast<int>(rng() % 6);
    auto g = tu::random_signed_graph(rng, n, 0.5);
    auto m = adjacency_matrix(g);
    // S = L * U with unit triangular L, U: invertible by construction
    std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n, Rational(0)));
    {
      std::vector<std::vector<Rational>> l(n, std::vector<Rational>(n, Rational(0)));
      std::vector<std::vector<Rational>> u(n, std::vector<Rational>(n, Rational(0)));
      for (int i = 0; i < n; ++i) {
        l[i][i] = Rational(1);
        u[i][i] = Rational(1);
        for (int j = 0; j < i; ++j) l[i][j] = Rational(static_cast<int>(rng() % 5) - 2);
        for (int j = i + 1; j < n; ++j) u[i][j] = Rational(static_cast<int>(rng() % 5) - 2);
      }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) s[i][j] += l[i][k] * u[k][j];
    }
    RationalSymmetricMatrix t(n);  // S^T M S
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        Rational acc(0);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) acc += s[a][i] * m.at(a, b) * s[b][j];
        t.set(i, j, acc);
      }
    }
    CHECK(congruent_diagonalize(t).inertia == congruent_diagonalize(m).inertia);
  }
}

TEST_CASE("float crosscheck reports ambiguity near the tolerance") {
  auto p2 = SignedGraph::from_edge_list(2, {{0, 1, Sign::plus()}});
  CHECK(float_crosscheck(p2, 0.5).ambiguous);   // eigenvalues +-1 inside [0.5, 5)
  CHECK_FALSE(float_crosscheck(p2, 1e-8).ambiguous);
  CHECK_THROWS(float_crosscheck(p2, 0.0));
}
