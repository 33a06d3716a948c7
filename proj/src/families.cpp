#include "signet/families.hpp"

#include <algorithm>

#include "signet/congruence.hpp"
#include "signet/predicates.hpp"
#include "signet/structure.hpp"
#include "signet/switching.hpp"

namespace signet {

namespace {

Sign plus() { return Sign::plus(); }

void append_pendants(std::vector<SignedEdge>& es, int& next, int at, int count) {
  for (int i = 0; i < count; ++i) es.push_back({at, next++, Sign::plus()});
}

void validate_family(const SignedGraph& g, int girth, const std::string& name) {
  const int expected = target_negative_inertia(girth);
  auto got = inertia(g).i_minus;
  if (got != expected)
    throw FamilyError(name + ": oracle validation failed, i- = " + std::to_string(got) +
                      " instead of " + std::to_string(expected));
}

}  // namespace

SignedGraph gen_cycle(int n, bool balanced) {
  if (n < 3) throw FamilyError("cycle needs at least 3 vertices");
  std::vector<SignedEdge> es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n, plus()});
  if (!balanced) es[0].sign = Sign::minus();
  return SignedGraph::from_edge_list(n, es);
}

SignedGraph gen_path(int n, const std::vector<Sign>& signs) {
  if (n < 1) throw FamilyError("path needs at least 1 vertex");
  if (!signs.empty() && signs.size() != static_cast<size_t>(n - 1))
    throw FamilyError("path: sign count mismatch");
  std::vector<SignedEdge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1, signs.empty() ? plus() : signs[i]});
  return SignedGraph::from_edge_list(n, es);
}

SignedGraph gen_star(int t) {
  if (t < 0) throw FamilyError("star needs a non-negative leaf count");
  std::vector<SignedEdge> es;
  for (int i = 1; i <= t; ++i) es.push_back({0, i, plus()});
  return SignedGraph::from_edge_list(t + 1, es);
}

int theta_girth(int a, int b, int c) {
  return std::min({a + b - 2, a + c - 2, b + c - 2});
}

SignedGraph gen_theta(const ThetaSpec& spec) {
  const int a = spec.a, b = spec.b, c = spec.c;
  if (a < 2 || b < 2 || c < 2) throw FamilyError("theta: path orders must be at least 2");
  if ((a == 2) + (b == 2) + (c == 2) > 1)
    throw FamilyError("theta: at most one path may have order 2");
  const int total_edges = (a - 1) + (b - 1) + (c - 1);
  if (!spec.edge_signs.empty() && spec.edge_signs.size() != static_cast<size_t>(total_edges))
    throw FamilyError("theta: sign count mismatch");
  std::vector<SignedEdge> es;
  int next = 2, edge_index = 0;
  auto sign_at = [&](int i) { return spec.edge_signs.empty() ? plus() : spec.edge_signs[i]; };
  for (int order : {a, b, c}) {
    int prev = 0;
    for (int i = 0; i < order - 2; ++i) {
      es.push_back({prev, next, sign_at(edge_index++)});
      prev = next++;
    }
    es.push_back({prev, 1, sign_at(edge_index++)});
  }
  return SignedGraph::from_edge_list(next, es);
}

SignedGraph gen_theta(int a, int b, int c) { return gen_theta(ThetaSpec{a, b, c, {}}); }

SignedGraph gen_theta_unbalanced(int a, int b, int c) {
  ThetaSpec spec{a, b, c, std::vector<Sign>(static_cast<size_t>(a + b + c - 3), plus())};
  // negative edge on the last longest path: flips every cycle through that
  // path while the girth cycle (two shortest paths) stays positive
  int longest = 2;
  if (spec.b > spec.c && spec.b >= spec.a) longest = 1;
  if (spec.a > spec.b && spec.a > spec.c) longest = 0;
  int offset = 0;
  if (longest >= 1) offset += a - 1;
  if (longest >= 2) offset += b - 1;
  spec.edge_signs[offset] = Sign::minus();
  return gen_theta(spec);
}

SignedGraph gen_canonical_unicyclic(const CanonicalUnicyclicSpec& spec) {
  const int g = spec.girth;
  if (g < 3) throw FamilyError("canonical unicyclic: girth must be at least 3");
  if (spec.stars.empty()) throw FamilyError("canonical unicyclic: at least one star required");
  std::vector<bool> used(g, false);
  for (auto [pos, count] : spec.stars) {
    if (pos < 0 || pos >= g) throw FamilyError("canonical unicyclic: star position out of range");
    if (count < 1) throw FamilyError("canonical unicyclic: star needs at least one pendant");
    if (used[pos]) throw FamilyError("canonical unicyclic: duplicate star position");
    used[pos] = true;
  }
  for (int p = 0; p < g; ++p)
    if (used[p] && used[(p + 1) % g])
      throw FamilyError("canonical unicyclic: adjacent star positions create a zero-length segment");
  std::vector<SignedEdge> es;
  for (int i = 0; i < g; ++i) es.push_back({i, (i + 1) % g, plus()});
  if (!spec.balanced) es[0].sign = Sign::minus();
  int next = g;
  for (auto [pos, count] : spec.stars) append_pendants(es, next, pos, count);
  return SignedGraph::from_edge_list(next, es);
}

int gamma_girth(int id) {
  switch (id) {
    case 1:
    case 2:
    case 4:
    case 5:
    case 6:
    case 7:
      return 6;
    case 3:
    case 8:
    case 9:
    case 10:
    case 11:
      return 7;
    default:
      throw FamilyError("gamma: unknown family id");
  }
}

int gamma_pendant_slots(int id) {
  switch (id) {
    case 1:
    case 2:
    case 5:
      return 3;
    case 3:
      return 5;
    case 4:
      return 0;
    case 6:
      return 4;
    case 7:
    case 8:
      return 5;
    case 9:
      return 7;
    case 10:
      return 2;
    case 11:
      return 1;
    default:
      throw FamilyError("gamma: unknown family id");
  }
}

SignedGraph gen_gamma(int id, const GammaParams& params, FamilyConvention conv) {
  gamma_girth(id);  // validates the id
  std::vector<int> p = params.pendants;
  p.resize(gamma_pendant_slots(id), 0);
  for (int v : p)
    if (v < 0) throw FamilyError("gamma: pendant counts must be non-negative");
  if (params.pendants.size() > static_cast<size_t>(gamma_pendant_slots(id)))
    throw FamilyError("gamma: too many pendant parameters");
  const bool has_tail = id <= 3;
  if (has_tail && params.tail < 1)
    throw FamilyError("gamma: the deep attachment vertex needs at least one pendant");
  if (!has_tail && params.tail != 1) throw FamilyError("gamma: tail only applies to families 1-3");

  auto nonzero = [&] { return static_cast<int>(std::count_if(p.begin(), p.end(), [](int v) { return v > 0; })); };

  std::vector<SignedEdge> es;
  int next = 0;
  std::vector<int> slots;  // vertex carrying each pendant parameter

  auto start_cycle = [&](int g) {
    for (int i = 0; i < g; ++i) es.push_back({i, (i + 1) % g, plus()});
    next = g;
  };

  switch (id) {
    case 1: {  // 3-fan with a deep pendant bundle at x'
      start_cycle(6);
      int x1 = next++, x2 = next++, x3 = next++, xp = next++;
      es.push_back({0, x1, plus()});
      es.push_back({2, x2, plus()});
      es.push_back({4, x3, plus()});
      es.push_back({x1, xp, plus()});
      es.push_back({x2, xp, plus()});
      es.push_back({x3, xp, plus()});
      append_pendants(es, next, xp, params.tail);
      slots = {0, 2, 4};
      break;
    }
    case 2: {  // 2-fan, attachment vertices at distance 2
      start_cycle(6);
      int x1 = next++, x2 = next++, xp = next++;
      es.push_back({0, x1, plus()});
      es.push_back({2, x2, plus()});
      es.push_back({x1, xp, plus()});
      es.push_back({x2, xp, plus()});
      append_pendants(es, next, xp, params.tail);
      slots = {0, 2, 4};
      break;
    }
    case 3: {  // 2-fan on C7, attachment vertices at distance 3
      if (p[3] > 0 && p[4] > 0) throw FamilyError("gamma3: d, e cannot both be non-zero");
      start_cycle(7);
      int x1 = next++, x2 = next++, xp = next++;
      es.push_back({0, x1, plus()});
      es.push_back({3, x2, plus()});
      es.push_back({x1, xp, plus()});
      es.push_back({x2, xp, plus()});
      append_pendants(es, next, xp, params.tail);
      slots = {0, 3, 5, 1, 2};
      break;
    }
    case 4:
    case 5: {  // 3-fan core, pendants at the fan terminals
      start_cycle(6);
      int x1 = next++, x2 = next++, x3 = next++, xp = next++;
      es.push_back({0, x1, plus()});
      es.push_back({2, x2, plus()});
      es.push_back({4, x3, plus()});
      es.push_back({x1, xp, plus()});
      es.push_back({x2, xp, plus()});
      es.push_back({x3, xp, plus()});
      slots = id == 5 ? std::vector<int>{0, 2, 4} : std::vector<int>{};
      break;
    }
    case 6: {  // balanced B(5,3,5) plus pendants
      if (p[3] > 0 && (p[0] > 0 || p[1] > 0 || p[2] > 0))
        throw FamilyError("gamma6: d must be zero if any one of a, b, c is non-zero");
      es = gen_theta(5, 3, 5).edges();
      next = 9;
      slots = {0, 1, 3, 5};
      break;
    }
    case 7: {  // unbalanced B(5,3,5) plus pendants
      if (nonzero() > 3) throw FamilyError("gamma7: at most three of a, b, c, d and e are non-zero");
      if ((p[3] > 0 || p[4] > 0) && (p[0] > 0 || p[1] > 0 || p[2] > 0))
        throw FamilyError("gamma7: a, b, c are all zero whenever one of d, e is non-zero");
      es = gen_theta(5, 3, 5).edges();
      for (auto& e : es)
        if (e.u == 1 && e.v == 4) e.sign = Sign::minus();
      next = 9;
      slots = {0, 1, 3, 6, 8};
      break;
    }
    case 8: {  // balanced B(5,4,5) plus pendants
      if (conv == FamilyConvention::statement) {
        if (nonzero() > 3) throw FamilyError("gamma8: at most three of a, b, c, d and e are non-zero");
        if ((p[3] > 0 || p[4] > 0) && (p[0] > 0 || p[1] > 0 || p[2] > 0))
          throw FamilyError("gamma8: a, b, c are all zero whenever one of d, e is non-zero");
      } else {
        if (nonzero() > 4) throw FamilyError("gamma8: at most four of a, b, c, d and e are non-zero");
        if (p[3] > 0 && p[4] > 0 && (p[0] > 0 || p[1] > 0 || p[2] > 0))
          throw FamilyError("gamma8: a, b, c are all zero whenever d and e are both non-zero");
      }
      es = gen_theta(5, 4, 5).edges();
      next = 10;
      slots = {0, 1, 3, 5, 6};
      break;
    }
    case 9: {  // unbalanced B(5,4,5) plus pendants
      if (nonzero() > 3) throw FamilyError("gamma9: at most three of them are non-zero");
      if (nonzero() == 3 && !(p[0] > 0 && p[1] > 0 && p[2] > 0))
        throw FamilyError("gamma9: at most three of them are non-zero, namely a, b, c");
      if (nonzero() == 2) {
        std::vector<int> which;
        for (size_t i = 0; i < p.size(); ++i)
          if (p[i] > 0) which.push_back(static_cast<int>(i));
        const std::vector<std::vector<int>> allowed = {{0, 1}, {0, 2}, {1, 2}, {0, 4}, {0, 3},
                                                       {1, 4}, {1, 3}, {5, 6}};
        if (std::find(allowed.begin(), allowed.end(), which) == allowed.end())
          throw FamilyError(
              "gamma9: these two are either two from a, b, c, or one of ae, ad, be, bd, fg");
      }
      es = gen_theta(5, 4, 5).edges();
      for (auto& e : es)
        if (e.u == 1 && e.v == 4) e.sign = Sign::minus();
      next = 10;
      slots = {0, 1, 8, 5, 6, 7, 9};
      break;
    }
    case 10: {  // balanced B(5,4,6) plus pendants on the long arc
      es = gen_theta(5, 4, 6).edges();
      next = 11;
      slots = {2, 4};
      break;
    }
    case 11: {  // unbalanced B(6,3,6) plus pendants on the short path
      es = gen_theta(6, 3, 6).edges();
      for (auto& e : es)
        if (e.u == 4 && e.v == 5) e.sign = Sign::minus();
      next = 11;
      slots = {6};
      break;
    }
    default:
      throw FamilyError("gamma: unknown family id");
  }

  for (size_t i = 0; i < slots.size(); ++i) append_pendants(es, next, slots[i], p[i]);
  auto g = SignedGraph::from_edge_list(next, es);
  validate_family(g, gamma_girth(id), "gamma" + std::to_string(id));
  return g;
}

SignedGraph gen_kjoin_family(const KJoinSpec& spec, const SignedGraph& gamma_prime) {
  const bool deep = spec.mode == KJoinMode::pendant_attach;
  if (deep && spec.star_leaves < 1)
    throw FamilyError("k-join: the deep variant needs at least one star leaf");
  if (!deep && spec.star_leaves < 0) throw FamilyError("k-join: negative leaf count");
  if (spec.targets.empty()) throw FamilyError("k-join: at least one target required");
  if (deep && spec.targets.size() != 1)
    throw FamilyError("k-join: the deep variant joins exactly one pendant vertex");

  if (!is_canonical_signed_unicyclic(gamma_prime))
    throw FamilyError("k-join: the base graph is not canonical signed unicyclic");
  auto base_thm11 = thm11_predicate(gamma_prime);
  if (!base_thm11.holds)
    throw FamilyError("k-join: the base graph does not attain the ceil(g/2) value");
  auto gr = girth_and_cycles(gamma_prime);
  const int girth = *gr.girth;
  if (girth % 4 != 2 && girth % 4 != 3)
    throw FamilyError("k-join: base girth must be 2 or 3 mod 4");
  if (!(gr.shortest_cycles.front().sign == Sign::plus()))
    throw FamilyError("k-join: the base cycle must be balanced");
  const auto& cyc = gr.shortest_cycles.front().vertices;

  int on_cycle = 0;
  for (int t : spec.targets) {
    bool is_cycle_vertex = std::find(cyc.begin(), cyc.end(), t) != cyc.end();
    on_cycle += is_cycle_vertex;
    if (!is_cycle_vertex && gamma_prime.degree(t) != 1)
      throw FamilyError("k-join: off-cycle targets must be pendant vertices");
    if (deep && is_cycle_vertex)
      throw FamilyError("k-join: the deep variant must attach to a pendant vertex");
  }
  if (!deep && on_cycle != 1)
    throw FamilyError("k-join: exactly one target must lie on the cycle");

  auto star = gen_star(spec.star_leaves);
  auto joined = k_join(star, 0, gamma_prime,
                       spec.targets, std::vector<Sign>(spec.targets.size(), plus()));
  auto jg = girth_and_cycles(joined);
  if (!jg.girth || *jg.girth != girth) throw FamilyError("k-join: attachment violates the girth");
  validate_family(joined, girth, "k-join");
  return joined;
}

std::vector<int> discover_attachments(const SignedGraph& base, int target_i_minus) {
  auto gr = girth_and_cycles(base);
  if (!gr.girth) throw FamilyError("discover_attachments: base has no cycle");
  for (const auto& c : gr.shortest_cycles)
    if (c.sign == Sign::plus()) return discover_attachments(base, c, target_i_minus);
  throw FamilyError("discover_attachments: no balanced shortest cycle");
}

std::vector<int> discover_attachments(const SignedGraph& base, const CycleWitness& cycle,
                                      int target_i_minus) {
  std::vector<int> sorted = cycle.vertices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (int v : sorted) {
    auto es = base.edges();
    es.push_back({v, base.vertex_count(), plus()});
    auto ext = SignedGraph::from_edge_list(base.vertex_count() + 1, es);
    if (inertia(ext).i_minus == target_i_minus) out.push_back(v);
  }
  return out;
}

namespace cores {

namespace {
SignedGraph assemble(int n, std::vector<SignedEdge> fixed,
                     const std::vector<std::pair<int, int>>& free_edges,
                     const Sign* signs, size_t count) {
  for (size_t i = 0; i < count; ++i)
    fixed.push_back({free_edges[i].first, free_edges[i].second, signs[i]});
  return SignedGraph::from_edge_list(n, fixed);
}
}  // namespace

SignedGraph fan3(const std::array<Sign, 6>& s) {
  std::vector<SignedEdge> cyc = {{0, 3, plus()}, {0, 4, plus()}, {1, 4, plus()},
                                 {1, 5, plus()}, {2, 3, plus()}, {2, 5, plus()}};
  return assemble(10, cyc, {{0, 6}, {1, 7}, {2, 8}, {6, 9}, {7, 9}, {8, 9}}, s.data(), s.size());
}

SignedGraph fan3_pendant(const std::array<Sign, 7>& s) {
  std::vector<SignedEdge> cyc = {{0, 3, plus()}, {0, 5, plus()}, {1, 3, plus()},
                                 {1, 4, plus()}, {2, 4, plus()}, {2, 5, plus()}};
  return assemble(11, cyc, {{0, 6}, {1, 7}, {2, 8}, {3, 9}, {6, 10}, {7, 10}, {8, 10}}, s.data(),
                  s.size());
}

SignedGraph b536(const std::array<Sign, 5>& s) {
  std::vector<SignedEdge> cyc = {{0, 2, plus()}, {0, 5, plus()}, {1, 2, plus()},
                                 {1, 3, plus()}, {3, 4, plus()}, {4, 5, plus()}};
  return assemble(10, cyc, {{0, 6}, {1, 7}, {6, 8}, {7, 9}, {8, 9}}, s.data(), s.size());
}

SignedGraph b626(const std::array<Sign, 5>& s) {
  std::vector<SignedEdge> cyc = {{0, 1, plus()}, {0, 5, plus()}, {1, 2, plus()},
                                 {2, 3, plus()}, {3, 4, plus()}, {4, 5, plus()}};
  return assemble(10, cyc, {{0, 6}, {1, 7}, {6, 8}, {7, 9}, {8, 9}}, s.data(), s.size());
}

SignedGraph b446(const std::array<Sign, 5>& s) {
  std::vector<SignedEdge> cyc;
  for (int i = 0; i < 6; ++i) cyc.push_back({i, (i + 1) % 6, plus()});
  return assemble(10, cyc, {{0, 6}, {3, 7}, {6, 8}, {7, 9}, {8, 9}}, s.data(), s.size());
}

SignedGraph b546(const std::array<Sign, 5>& s) {
  std::vector<SignedEdge> cyc = {{0, 3, plus()}, {0, 6, plus()}, {1, 2, plus()}, {1, 4, plus()},
                                 {2, 3, plus()}, {4, 5, plus()}, {5, 6, plus()}};
  return assemble(11, cyc, {{0, 7}, {1, 8}, {7, 9}, {8, 10}, {9, 10}}, s.data(), s.size());
}

SignedGraph b636(const std::array<Sign, 5>& s) {
  std::vector<SignedEdge> cyc;
  for (int i = 0; i < 7; ++i) cyc.push_back({i, (i + 1) % 7, plus()});
  return assemble(11, cyc, {{0, 7}, {2, 8}, {7, 9}, {8, 10}, {9, 10}}, s.data(), s.size());
}

SignedGraph b666(const std::array<Sign, 5>& s) {
  std::vector<SignedEdge> cyc = {{0, 5, plus()}, {0, 6, plus()}, {1, 2, plus()}, {1, 9, plus()},
                                 {2, 3, plus()}, {3, 4, plus()}, {4, 5, plus()}, {6, 7, plus()},
                                 {7, 8, plus()}, {8, 9, plus()}};
  return assemble(14, cyc, {{0, 10}, {1, 11}, {10, 12}, {11, 13}, {12, 13}}, s.data(), s.size());
}

}  // namespace cores

}  // namespace signet
