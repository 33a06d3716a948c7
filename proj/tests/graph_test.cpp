#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "signet/graph.hpp"
#include "test_util.hpp"

using namespace signet;
namespace tu = signet::testutil;

TEST_CASE("from_edge_list basics") {
  auto p2 = SignedGraph::from_edge_list(2, {{0, 1, Sign::plus()}});
  CHECK(p2.vertex_count() == 2);
  CHECK(p2.edge_count() == 1);
  CHECK(p2.sign(0, 1) == Sign::plus());
  CHECK(p2.sign(1, 0) == Sign::plus());

  auto c4 = SignedGraph::from_edge_list(
      4, {{0, 1, Sign::plus()}, {1, 2, Sign::plus()}, {2, 3, Sign::plus()}, {3, 0, Sign::minus()}});
  CHECK(c4.edge_count() == 4);
  CHECK(c4.sign(3, 0) == Sign::minus());
  CHECK(c4.degree(2) == 2);
}

TEST_CASE("from_edge_list rejections") {
  CHECK_THROWS_AS(SignedGraph::from_edge_list(3, {{0, 1, Sign::plus()}, {1, 0, Sign::minus()}}),
                  GraphError);
  CHECK_THROWS_AS(SignedGraph::from_edge_list(3, {{0, 0, Sign::plus()}}), GraphError);
  CHECK_THROWS_AS(SignedGraph::from_edge_list(2, {{0, 2, Sign::plus()}}), GraphError);
}

TEST_CASE("induced subgraph") {
  auto c6 = tu::cycle_graph(6);
  auto sub = c6.induced_subgraph({0, 1, 2});
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.edge_count() == 2);  // the path 0-1-2

  std::vector<int> all(6);
  std::iota(all.begin(), all.end(), 0);
  auto copy = c6.induced_subgraph(all);
  CHECK(copy.edges() == c6.edges());

  auto c4 = SignedGraph::from_edge_list(
      4, {{0, 1, Sign::plus()}, {1, 2, Sign::plus()}, {2, 3, Sign::plus()}, {3, 0, Sign::minus()}});
  std::vector<int> old_to_new;
  auto pair = c4.induced_subgraph({0, 3}, &old_to_new);
  CHECK(pair.edge_count() == 1);
  CHECK(pair.sign(0, 1) == Sign::minus());
  CHECK(old_to_new[0] == 0);
  CHECK(old_to_new[3] == 1);
  CHECK(old_to_new[1] == -1);

  CHECK_THROWS_AS(c4.induced_subgraph({0, 9}), GraphError);
}

TEST_CASE("structure queries") {
  auto star = tu::star_graph(4);
  CHECK(star.pendant_vertices().size() == 4);
  CHECK(star.degree(0) == 4);
  CHECK(star.is_connected());

  auto c6 = tu::cycle_graph(6);
  CHECK(c6.pendant_vertices().empty());
  for (int v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);

  auto two_edges = SignedGraph::from_edge_list(4, {{0, 1, Sign::plus()}, {2, 3, Sign::plus()}});
  CHECK_FALSE(two_edges.is_connected());
  CHECK(two_edges.component_count() == 2);
}

TEST_CASE("k_join") {
  auto k12 = tu::star_graph(2);
  auto c6 = tu::cycle_graph(6);
  auto joined = k_join(k12, 0, c6, {2}, {Sign::plus()});
  CHECK(joined.vertex_count() == 9);
  CHECK(joined.edge_count() == k12.edge_count() + c6.edge_count() + 1);
  CHECK(joined.is_connected());
  CHECK(joined.has_edge(0, 3 + 2));

  auto k1 = SignedGraph::from_edge_list(1, {});
  auto p2 = k_join(k1, 0, k1, {0}, {Sign::plus()});
  CHECK(p2.vertex_count() == 2);
  CHECK(p2.edge_count() == 1);

  CHECK_THROWS_AS(k_join(k12, 0, c6, {2, 2}, {Sign::plus(), Sign::plus()}), GraphError);
  CHECK_THROWS_AS(k_join(k12, 0, c6, {}, {}), GraphError);
}

TEST_CASE("handshake identity on random graphs") {
  std::mt19937_64 rng(123);
  for (int iter = 0; iter < 50; ++iter) {
    auto g = tu::random_signed_graph(rng, 3 + static_cast<int>(rng() % 10), 0.4);
    long long degsum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) degsum += g.degree(v);
    CHECK(degsum == 2ll * g.edge_count());
  }
}
