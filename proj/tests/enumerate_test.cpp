#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "signet/cycles.hpp"
#include "signet/congruence.hpp"
#include "signet/enumerate.hpp"
#include "signet/isomorphism.hpp"
#include "test_util.hpp"

using namespace signet;
namespace tu = signet::testutil;

namespace {

// all connected graphs on exactly n labeled vertices with girth in range and
// cyclomatic number within bound, counted up to isomorphism by brute force
// over edge subsets
int naive_count(int n, int girth_min, int girth_max, int cyclomatic_max) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::set<std::vector<uint8_t>> seen;
  for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
    if (__builtin_popcount(mask) - n + 1 > cyclomatic_max) continue;
    std::vector<SignedEdge> es;
    for (size_t b = 0; b < slots.size(); ++b)
      if (mask & (1u << b)) es.push_back({slots[b].first, slots[b].second, Sign::plus()});
    auto g = SignedGraph::from_edge_list(n, es);
    if (!g.is_connected()) continue;
    auto gr = girth_and_cycles(g);
    if (!gr.girth || *gr.girth < girth_min || *gr.girth > girth_max) continue;
    seen.insert(canonical_form(g));
  }
  return static_cast<int>(seen.size());
}

}  // namespace

TEST_CASE("forced small enumerations") {
  auto only_c6 = enumerate_underlying(6, 6, 6, 1);
  REQUIRE(only_c6.size() == 1);
  CHECK(underlying_isomorphic(only_c6[0], tu::cycle_graph(6)));

  auto up_to_7 = enumerate_underlying(7, 6, 7, 1);
  // C6, C7, C6 plus one pendant
  CHECK(up_to_7.size() == 3);
}

TEST_CASE("enumeration agrees with naive subset filter") {
  // exact-girth counts per order
  for (int n = 4; n <= 7; ++n) {
    auto graphs = enumerate_underlying(n, 4, 5, 3);
    int at_n = 0;
    for (const auto& g : graphs) at_n += g.vertex_count() == n;
    CHECK(at_n == naive_count(n, 4, 5, 3));
  }
  for (int n = 6; n <= 7; ++n) {
    auto graphs = enumerate_underlying(n, 6, 7, 3);
    int at_n = 0;
    for (const auto& g : graphs) at_n += g.vertex_count() == n;
    CHECK(at_n == naive_count(n, 6, 7, 3));
  }
}

TEST_CASE("no duplicates up to isomorphism") {
  auto graphs = enumerate_underlying(9, 5, 9, 2);
  std::set<std::vector<uint8_t>> keys;
  for (const auto& g : graphs) {
    auto k = canonical_form(g);
    CHECK(keys.insert(k).second);
  }
}

TEST_CASE("deterministic output") {
  auto a = enumerate_underlying(8, 5, 8, 2);
  auto b = enumerate_underlying(8, 5, 8, 2);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].edges() == b[i].edges());
}

TEST_CASE("bounds rejected") {
  CHECK_THROWS(enumerate_underlying(99, 6, 6, 1));
  CHECK_THROWS(enumerate_underlying(8, 6, 6, 9));
}

TEST_CASE("switching classes") {
  CHECK(enumerate_switching_classes(tu::cycle_graph(6)).size() == 2);
  std::mt19937_64 rng(6);
  CHECK(enumerate_switching_classes(tu::random_tree(rng, 8)).size() == 1);

  // theta graph, paths of 3,3,4 edges: the path swap merges two of the four
  // co-tree sign vectors
  auto theta = SignedGraph::from_edge_list(9, {{0, 2, Sign::plus()},
                                               {2, 3, Sign::plus()},
                                               {3, 1, Sign::plus()},
                                               {0, 4, Sign::plus()},
                                               {4, 5, Sign::plus()},
                                               {5, 1, Sign::plus()},
                                               {0, 6, Sign::plus()},
                                               {6, 7, Sign::plus()},
                                               {7, 8, Sign::plus()},
                                               {8, 1, Sign::plus()}});
  auto classes = enumerate_switching_classes(theta);
  CHECK(classes.size() == 3);

  // three equal paths: a larger automorphism group leaves two classes
  auto banana = SignedGraph::from_edge_list(8, {{0, 2, Sign::plus()},
                                                {2, 3, Sign::plus()},
                                                {3, 1, Sign::plus()},
                                                {0, 4, Sign::plus()},
                                                {4, 5, Sign::plus()},
                                                {5, 1, Sign::plus()},
                                                {0, 6, Sign::plus()},
                                                {6, 7, Sign::plus()},
                                                {7, 1, Sign::plus()}});
  CHECK(enumerate_switching_classes(banana).size() == 2);

  // every class member expands to the same inertia: spot check within classes
  for (const auto& rep : classes) {
    auto again = enumerate_switching_classes(rep);  // signs of rep ignored: same underlying
    CHECK(again.size() == classes.size());
  }
}

TEST_CASE("all members of a switching class share the inertia triple") {
  // expand classes of 100 small graphs fully over all sign assignments
  std::mt19937_64 rng(1000);
  int expanded = 0;
  while (expanded < 100) {
    int n = 4 + static_cast<int>(rng() % 4);
    auto g = tu::random_unicyclic(rng, n, 3 + static_cast<int>(rng() % (n - 2)));
    const int m = g.edge_count();
    if (m > 9) continue;
    ++expanded;
    std::map<std::vector<uint8_t>, InertiaTriple> by_class;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::vector<Sign> signs;
      for (int b = 0; b < m; ++b)
        signs.push_back(mask & (1u << b) ? Sign::minus() : Sign::plus());
      auto h = g.with_signs(signs);
      // class signature: signs of the fundamental cycle, here the unique one
      auto cyc = girth_and_cycles(h).shortest_cycles.front();
      std::vector<uint8_t> key{static_cast<uint8_t>(cyc.sign.is_positive() ? 1 : 0)};
      auto it = by_class.find(key);
      auto tri = inertia(h);
      if (it == by_class.end())
        by_class.emplace(key, tri);
      else
        CHECK(it->second == tri);
    }
    CHECK(by_class.size() == 2);
  }
}
