#include <algorithm>

#include "doctest.h"
#include "dwl/digraph.hpp"
#include "oracle_helpers.hpp"

using namespace dwl;

namespace {
const Digraph kC3(3, {{0, 1}, {1, 2}, {2, 0}});
const Digraph kDag2(2, {{0, 1}});
}  // namespace

TEST_CASE("digraph construction rejects malformed input") {
  CHECK_THROWS_AS(Digraph(2, {{0, 0}}), InvalidInputError);
  CHECK_THROWS_AS(Digraph(2, {{0, 1}, {0, 1}}), InvalidInputError);
  CHECK_THROWS_AS(Digraph(2, {{0, 2}}), InvalidInputError);
  CHECK_THROWS_AS(Digraph(-1), InvalidInputError);
}

TEST_CASE("induced subgraphs keep original identities") {
  Digraph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  Digraph sub = g.induced({1, 2, 3});
  CHECK(sub.vertices() == VertexSet{1, 2, 3});
  CHECK(sub.arcs() == std::vector<Arc>{{1, 2}, {2, 3}});
  Digraph deeper = sub.induced({2, 3});
  CHECK(deeper.vertices() == VertexSet{2, 3});
  CHECK(deeper.has_arc(2, 3));
}

TEST_CASE("scc_condensation on fixed graphs") {
  CHECK(scc_condensation(kC3).components == std::vector<VertexSet>{{0, 1, 2}});
  CHECK(scc_condensation(kDag2).components == std::vector<VertexSet>{{0}, {1}});

  // Expected value pinned by the subset-enumeration oracle.
  Digraph g(3, {{0, 1}, {1, 0}, {1, 2}});
  auto brute = testing::brute_sccs(g);
  std::sort(brute.begin(), brute.end());
  CHECK(brute == std::vector<VertexSet>{{0, 1}, {2}});
  CHECK(scc_condensation(g).components == std::vector<VertexSet>{{0, 1}, {2}});
}

TEST_CASE("scc_condensation components partition V and order arcs forward") {
  for (int i = 0; i < 80; ++i) {
    Digraph g = testing::random_digraph(1 + i % 6, 0.3, 100 + i);
    auto cond = scc_condensation(g);
    VertexSet all;
    for (const auto& c : cond.components) {
      CHECK(set_disjoint(all, c));
      all = set_union(all, c);
    }
    CHECK(all == g.vertices());
    for (size_t a = 0; a < cond.components.size(); ++a)
      for (size_t b = 0; b < a; ++b)
        for (int u : cond.components[a])
          for (int v : g.out_neighbors(u)) CHECK(!set_contains(cond.components[b], v));
  }
}

TEST_CASE("reachable_set basics") {
  CHECK(reachable_set(kC3, {0}, {1}) == VertexSet{0});
  CHECK(reachable_set(kDag2, {0}, {}) == VertexSet{0, 1});
  CHECK(reachable_set(kC3, {0}, {}) == VertexSet{0, 1, 2});
  CHECK_THROWS_AS(reachable_set(kC3, {0}, {0}), InvalidInputError);
}

TEST_CASE("reachable_set is monotone in sources, antitone in blocked") {
  for (int i = 0; i < 60; ++i) {
    Digraph g = testing::random_digraph(5, 0.3, 300 + i);
    VertexSet small{0}, large{0, 2};
    VertexSet none{}, some{3};
    CHECK(set_subset(reachable_set(g, small, some), reachable_set(g, large, some)));
    CHECK(set_subset(reachable_set(g, small, some), reachable_set(g, small, none)));
  }
}

TEST_CASE("is_guarding examples") {
  CHECK(is_guarding(kDag2, {0}, {1}));
  CHECK_FALSE(is_guarding(kDag2, {0}, {}));
  CHECK(is_guarding(kC3, {}, {}));
  CHECK(is_guarding(kC3, {}, {1}));
}

TEST_CASE("is_normal examples") {
  // Pinned by enumerating all simple paths in G \ {1}.
  CHECK(testing::brute_is_normal(kC3, {0}, {1}));
  CHECK(is_normal(kC3, {0}, {1}));
  CHECK_FALSE(is_normal(kC3, {0}, {}));
  CHECK(is_normal(kC3, {}, {}));
  CHECK(is_normal(kDag2, {}, {1}));
}

TEST_CASE("normality agrees with path enumeration and component enumeration") {
  for (int n = 1; n <= 5; ++n) {
    int graphs = n == 5 ? 200 : 210;
    for (int i = 0; i < graphs; ++i) {
      Digraph g = testing::random_digraph(n, 0.1 + 0.15 * (i % 6), 1000 * n + i);
      for (unsigned wm = 0; wm < (1u << n); ++wm)
        for (unsigned xm = 0; xm < (1u << n); ++xm) {
          VertexSet w, x;
          for (int v = 0; v < n; ++v) {
            if (wm >> v & 1u) w.push_back(v);
            if (xm >> v & 1u) x.push_back(v);
          }
          bool got = is_normal(g, w, x);
          CHECK(got == testing::brute_consecutive_components(g, w, x));
          // Path enumeration is slower; sample it.
          if (i % 10 == 0) CHECK(got == testing::brute_is_normal(g, w, x));
        }
    }
  }
}

TEST_CASE("guarding implies normality") {
  for (int i = 0; i < 120; ++i) {
    Digraph g = testing::random_digraph(1 + i % 5, 0.35, 5000 + i);
    int n = g.vertex_count();
    for (unsigned wm = 0; wm < (1u << n); ++wm)
      for (unsigned xm = 0; xm < (1u << n); ++xm) {
        VertexSet w, x;
        for (int v = 0; v < n; ++v) {
          if (wm >> v & 1u) w.push_back(v);
          if (xm >> v & 1u) x.push_back(v);
        }
        if (is_guarding(g, w, x)) CHECK(is_normal(g, w, x));
      }
  }
}

TEST_CASE("biorient symmetrizes") {
  Digraph b = biorient(kDag2);
  CHECK(b.has_arc(0, 1));
  CHECK(b.has_arc(1, 0));
  CHECK(biorient(b) == b);
}
