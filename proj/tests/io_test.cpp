#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "signet/families.hpp"
#include "signet/io.hpp"
#include "test_util.hpp"

using namespace signet;
namespace tu = signet::testutil;

TEST_CASE("edge list round trip") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 500; ++iter) {
    auto g = tu::random_signed_graph(rng, 1 + static_cast<int>(rng() % 12), 0.4);
    auto back = parse_edge_list_string(serialize_edge_list(g));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
  }
}

TEST_CASE("parser accepts comments and blank lines") {
  auto g = parse_edge_list_string("# a signed path\n2 1\n\n0 1 -  # negative edge\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.sign(0, 1) == Sign::minus());
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_edge_list_string("2 1\n0 0 +\n"), "line 2: self-loop", IoError);
  CHECK_THROWS_AS(parse_edge_list_string("2 1\n0 3 +\n"), IoError);
  CHECK_THROWS_AS(parse_edge_list_string("2 1\n0 1 ?\n"), IoError);
  CHECK_THROWS_AS(parse_edge_list_string("2 2\n0 1 +\n"), IoError);
  CHECK_THROWS_AS(parse_edge_list_string(""), IoError);
  CHECK_THROWS_AS(parse_edge_list_string("3 2\n0 1 +\n0 1 -\n"), IoError);
}

TEST_CASE("serialization is sorted and stable") {
  auto g = SignedGraph::from_edge_list(
      4, {{3, 0, Sign::minus()}, {1, 0, Sign::plus()}, {2, 1, Sign::plus()}});
  CHECK(serialize_edge_list(g) == "4 3\n0 1 +\n0 3 -\n1 2 +\n");
}

TEST_CASE("invariant report fields") {
  auto j = invariant_report(gen_cycle(6, true), /*with_meta=*/false);
  CHECK(j["girth"] == 6);
  CHECK(j["balance"]["balanced"] == true);
  CHECK(j["inertia"]["plus"] == 3);
  CHECK(j["inertia"]["minus"] == 3);
  CHECK(j["inertia"]["nullity"] == 0);
  CHECK(j["det"] == "-4");
  CHECK(j["det_sign"] == -1);
  CHECK_FALSE(j.contains("meta"));

  auto j2 = invariant_report(gen_cycle(4, false), false);
  CHECK(j2["inertia"]["minus"] == 2);
  CHECK(j2["balance"]["balanced"] == false);

  // identical graphs give byte-identical reports without meta
  auto a = invariant_report(gen_gamma(5, {1, {1, 0, 0}}), false).dump();
  auto b = invariant_report(gen_gamma(5, {1, {1, 0, 0}}), false).dump();
  CHECK(a == b);
}

TEST_CASE("digest ties reports to inputs") {
  auto d1 = fnv1a_digest(serialize_edge_list(gen_cycle(6, true)));
  auto d2 = fnv1a_digest(serialize_edge_list(gen_cycle(6, false)));
  CHECK(d1 != d2);
  CHECK(d1.size() == 16);
}
