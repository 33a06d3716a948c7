#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "signet/congruence.hpp"
#include "signet/families.hpp"
#include "signet/isomorphism.hpp"
#include "signet/predicates.hpp"
#include "signet/switching.hpp"

using namespace signet;

namespace {

template <size_t N>
std::array<Sign, N> signs_of(unsigned mask) {
  std::array<Sign, N> s;
  for (size_t i = 0; i < N; ++i) s[i] = (mask >> i & 1) ? Sign::minus() : Sign::plus();
  return s;
}

}  // namespace

TEST_CASE("basic generators") {
  CHECK(inertia(gen_cycle(6, true)).i_minus == 3);
  CHECK(inertia(gen_cycle(4, false)).i_minus == 2);
  CHECK(inertia(gen_star(4)).i_minus == 1);
  CHECK(gen_path(1).vertex_count() == 1);
  CHECK_THROWS_AS(gen_cycle(2, true), FamilyError);
}

TEST_CASE("theta construction") {
  auto t = gen_theta(5, 3, 5);
  CHECK(t.vertex_count() == 9);
  CHECK(t.edge_count() == 10);
  CHECK(*girth_and_cycles(t).girth == 6);
  CHECK(theta_girth(5, 3, 5) == 6);
  CHECK(theta_girth(4, 4, 5) == 6);
  CHECK(theta_girth(5, 4, 6) == 7);
  CHECK_THROWS_AS(gen_theta(2, 2, 5), FamilyError);

  // unbalanced representative keeps a balanced shortest cycle
  auto u = gen_theta_unbalanced(4, 4, 5);
  bool has_balanced = false;
  for (const auto& c : girth_and_cycles(u).shortest_cycles)
    has_balanced |= c.sign == Sign::plus();
  CHECK(has_balanced);
  CHECK_FALSE(balance(u).balanced);
}

TEST_CASE("theta inertia values from the derivation") {
  CHECK(inertia(gen_theta(5, 3, 5)).i_minus == 4);
  CHECK(inertia(gen_theta_unbalanced(5, 3, 5)).i_minus == 4);
  CHECK(inertia(gen_theta(4, 4, 5)).i_minus == 5);
  CHECK(inertia(gen_theta_unbalanced(4, 4, 5)).i_minus == 4);
  CHECK(inertia(gen_theta(5, 4, 5)).i_minus == 5);
  CHECK(inertia(gen_theta_unbalanced(5, 4, 5)).i_minus == 5);
  CHECK(inertia(gen_theta(4, 4, 4)).i_minus == 4);
  CHECK(inertia(gen_theta(6, 6, 6)).i_minus == 7);
}

TEST_CASE("printed-order cores: all free-sign choices") {
  for (unsigned m = 0; m < 64; ++m) {
    CHECK(inertia(cores::fan3(signs_of<6>(m))).i_minus == 4);
  }
  for (unsigned m = 0; m < 32; ++m) {
    auto s = signs_of<5>(m);
    CHECK(inertia(cores::b536(s)).i_minus == 5);
    CHECK(inertia(cores::b626(s)).i_minus == 5);
    CHECK(inertia(cores::b446(s)).i_minus == 5);
    CHECK(inertia(cores::b666(s)).i_minus == 7);
  }
}

TEST_CASE("printed fan3 adjacency matrix rows") {
  auto g = cores::fan3(signs_of<6>(0));
  auto m = adjacency_matrix(g);
  // row 1 of the 3-fan core: y1 ~ y4, y5, x1
  CHECK(m.at(0, 3) == Rational(1));
  CHECK(m.at(0, 4) == Rational(1));
  CHECK(m.at(0, 6) == Rational(1));
  CHECK(m.at(0, 1) == Rational(0));
  CHECK(m.at(0, 2) == Rational(0));
  // x' row touches exactly x1, x2, x3
  for (int j = 0; j < 6; ++j) CHECK(m.at(9, j) == Rational(0));
  CHECK(m.at(9, 6) == Rational(1));
  CHECK(m.at(9, 7) == Rational(1));
  CHECK(m.at(9, 8) == Rational(1));
}

TEST_CASE("b546 16-of-32 split") {
  int at5 = 0;
  for (unsigned m = 0; m < 32; ++m) {
    auto g = cores::b546(signs_of<5>(m));
    int im = inertia(g).i_minus;
    CHECK((im == 5 || im == 6));
    if (im == 5) {
      ++at5;
      CHECK(balance(g).balanced);  // switching equivalent to the all-positive copy
    } else {
      CHECK_FALSE(balance(g).balanced);
    }
  }
  CHECK(at5 == 16);
}

TEST_CASE("b636 16-of-32 split, opposite sign condition") {
  int at5 = 0;
  SignedGraph first_hit;
  for (unsigned m = 0; m < 32; ++m) {
    auto g = cores::b636(signs_of<5>(m));
    int im = inertia(g).i_minus;
    CHECK((im == 5 || im == 6));
    if (im == 5) {
      if (at5 == 0) first_hit = g;
      ++at5;
      CHECK(switching_equivalent(g, first_hit));
      CHECK_FALSE(balance(g).balanced);
    }
  }
  CHECK(at5 == 16);
  // the qualifying class is the gamma11 base class
  CHECK(signed_isomorphic(first_hit, gen_gamma(11)));
}

TEST_CASE("fan3 pendant distribution") {
  // pendant at a non-terminal cycle vertex: 5 except in one switching class
  std::set<int> seen;
  for (unsigned m = 0; m < 128; ++m) {
    auto g = cores::fan3_pendant(signs_of<7>(m));
    seen.insert(inertia(g).i_minus);
  }
  CHECK(seen == std::set<int>{4, 5});
}

TEST_CASE("canonical unicyclic generator") {
  auto g = gen_canonical_unicyclic({6, true, {{0, 1}, {3, 1}}});
  CHECK(g.vertex_count() == 8);
  CHECK(inertia(g).i_minus == 4);
  CHECK_THROWS_AS(gen_canonical_unicyclic({6, true, {{0, 1}, {1, 1}}}), FamilyError);
  CHECK_THROWS_AS(gen_canonical_unicyclic({6, true, {{0, 0}}}), FamilyError);
  CHECK_THROWS_AS(gen_canonical_unicyclic({6, true, {}}), FamilyError);
}

TEST_CASE("gamma families validate against the oracle") {
  CHECK(inertia(gen_gamma(1, {1, {0, 0, 0}})).i_minus == 4);
  CHECK(inertia(gen_gamma(1, {2, {1, 2, 0}})).i_minus == 4);
  CHECK(inertia(gen_gamma(2, {1, {0, 0, 0}})).i_minus == 4);
  CHECK(inertia(gen_gamma(2, {3, {2, 1, 1}})).i_minus == 4);
  CHECK(inertia(gen_gamma(3, {1, {0, 0, 0, 0, 0}})).i_minus == 5);
  CHECK(inertia(gen_gamma(3, {1, {1, 1, 1, 1, 0}})).i_minus == 5);
  CHECK(inertia(gen_gamma(3, {2, {0, 0, 0, 0, 2}})).i_minus == 5);
  CHECK(inertia(gen_gamma(4)).i_minus == 4);
  CHECK(inertia(gen_gamma(5, {1, {1, 1, 1}})).i_minus == 4);
  CHECK(inertia(gen_gamma(6, {1, {2, 1, 1, 0}})).i_minus == 4);
  CHECK(inertia(gen_gamma(6, {1, {0, 0, 0, 3}})).i_minus == 4);
  CHECK(inertia(gen_gamma(7, {1, {1, 1, 1, 0, 0}})).i_minus == 4);
  CHECK(inertia(gen_gamma(7, {1, {0, 0, 0, 2, 1}})).i_minus == 4);
  CHECK(inertia(gen_gamma(8, {1, {1, 1, 1, 0, 0}})).i_minus == 5);
  CHECK(inertia(gen_gamma(8, {1, {1, 1, 1, 1, 0}}, FamilyConvention::proof)).i_minus == 5);
  CHECK(inertia(gen_gamma(9, {1, {1, 1, 1, 0, 0, 0, 0}})).i_minus == 5);
  CHECK(inertia(gen_gamma(9, {1, {0, 0, 0, 0, 0, 1, 2}})).i_minus == 5);
  CHECK(inertia(gen_gamma(10, {1, {2, 1}})).i_minus == 5);
  CHECK(inertia(gen_gamma(11, {1, {3}})).i_minus == 5);
}

TEST_CASE("gamma side conditions") {
  CHECK_THROWS_WITH_AS(gen_gamma(3, {1, {0, 0, 0, 1, 1}}),
                       "gamma3: d, e cannot both be non-zero", FamilyError);
  CHECK_THROWS_AS(gen_gamma(6, {1, {1, 0, 0, 1}}), FamilyError);
  CHECK_THROWS_AS(gen_gamma(7, {1, {1, 0, 0, 1, 0}}), FamilyError);
  CHECK_THROWS_AS(gen_gamma(8, {1, {1, 1, 1, 1, 0}}, FamilyConvention::statement), FamilyError);
  CHECK_THROWS_AS(gen_gamma(8, {1, {1, 0, 0, 1, 1}}, FamilyConvention::proof), FamilyError);
  CHECK_THROWS_WITH_AS(gen_gamma(9, {1, {1, 1, 1, 1, 0, 0, 0}}),
                       "gamma9: at most three of them are non-zero", FamilyError);
  CHECK_THROWS_AS(gen_gamma(9, {1, {0, 0, 1, 1, 0, 0, 0}}), FamilyError);
  CHECK_THROWS_AS(gen_gamma(1, {0, {}}), FamilyError);
  CHECK_THROWS_AS(gen_gamma(12, {}), FamilyError);
}

TEST_CASE("k-join families") {
  // deep: star center on one pendant of a graph at the ceil(g/2) value
  auto base = gen_canonical_unicyclic({6, true, {{0, 1}}});  // C6 + pendant, segments (5)
  KJoinSpec deep{KJoinMode::pendant_attach, 2, {6}};
  auto joined = gen_kjoin_family(deep, base);
  CHECK(inertia(joined).i_minus == 4);
  CHECK(joined.vertex_count() == 7 + 3);

  // shallow: k=1 to a cycle vertex of a bare cycle
  KJoinSpec shallow{KJoinMode::cycle_attach, 2, {0}};
  auto j2 = gen_kjoin_family(shallow, gen_cycle(6, true));
  CHECK(inertia(j2).i_minus == 4);

  // shallow k=2, degenerate star: B(4,4,4)
  KJoinSpec degenerate{KJoinMode::cycle_attach, 0, {3, 6}};
  auto j3 = gen_kjoin_family(degenerate, base);
  CHECK(inertia(j3).i_minus == 4);
  CHECK(underlying_isomorphic(j3, gen_theta(4, 4, 4)));

  // larger degenerate-star instance: two extra stars stay on target
  auto base2 = gen_canonical_unicyclic({6, true, {{3, 1}, {1, 1}, {5, 1}}});
  KJoinSpec deg2{KJoinMode::cycle_attach, 0, {0, 6}};
  CHECK(inertia(gen_kjoin_family(deg2, base2)).i_minus == 4);

  // wrong attachment: deep variant to a cycle vertex
  CHECK_THROWS_AS(gen_kjoin_family({KJoinMode::pendant_attach, 1, {0}}, base), FamilyError);
  // base failing the ceil(g/2) value: segments (2,2)
  auto bad = gen_canonical_unicyclic({6, true, {{0, 1}, {3, 1}}});
  CHECK_THROWS_AS(gen_kjoin_family({KJoinMode::pendant_attach, 1, {6}}, bad), FamilyError);
  // girth violation: join to two cycle vertices
  CHECK_THROWS_AS(gen_kjoin_family({KJoinMode::cycle_attach, 1, {0, 3}}, gen_cycle(6, true)),
                  FamilyError);
}

TEST_CASE("discover attachments") {
  CHECK(discover_attachments(gen_gamma(4), 4) == std::vector<int>{0, 2, 4});
  CHECK(discover_attachments(gen_theta(5, 4, 6), 5) == std::vector<int>{2, 4});
  // gamma11 base: exactly one admissible position
  auto gamma11_base = gen_gamma(11);
  CHECK(discover_attachments(gamma11_base, 5).size() == 1);
  // balanced B(5,3,5): four positions on the first balanced shortest cycle
  auto found = discover_attachments(gen_theta(5, 3, 5), 4);
  CHECK(found.size() == 4);
}

TEST_CASE("generated families satisfy their theorem hypotheses") {
  auto check_hyp = [](const SignedGraph& g, bool want_deep) {
    auto hyp = hypothesis_check(g);
    CHECK(hyp.common_ok());
    if (want_deep)
      CHECK(hyp.qualifies_deep());
    else
      CHECK(hyp.qualifies_shallow());
  };
  check_hyp(gen_gamma(1, {1, {1, 0, 0}}), true);
  check_hyp(gen_gamma(2, {2, {0, 1, 0}}), true);
  check_hyp(gen_gamma(3, {1, {0, 0, 1, 0, 0}}), true);
  check_hyp(gen_gamma(5, {1, {1, 1, 0}}), false);
  check_hyp(gen_gamma(6, {1, {1, 0, 0, 0}}), false);
  check_hyp(gen_gamma(7, {1, {0, 1, 0, 0, 0}}), false);
  check_hyp(gen_gamma(8, {1, {0, 0, 1, 0, 0}}), false);
  check_hyp(gen_gamma(9, {1, {0, 1, 0, 0, 0, 0, 0}}), false);
  check_hyp(gen_gamma(10, {1, {1, 1}}), false);
  check_hyp(gen_gamma(11, {1, {1}}), false);
  check_hyp(gen_theta_unbalanced(4, 4, 5), false);
}

TEST_CASE("balanced-base families switch to all-positive") {
  for (const auto& g : {gen_gamma(1, {1, {1, 1, 0}}), gen_gamma(2, {1, {0, 0, 1}}),
                        gen_gamma(5, {1, {2, 0, 0}}), gen_gamma(6, {1, {1, 1, 0, 0}})}) {
    auto bal = balance(g);
    REQUIRE(bal.balanced);
    auto switched = apply_switching(g, bal.theta);
    for (const auto& e : switched.edges()) CHECK(e.sign == Sign::plus());
  }
}
