#include "doctest.h"
#include "dwl/approx_dtw.hpp"
#include "dwl/oracles.hpp"
#include "dwl/separator.hpp"
#include "oracle_helpers.hpp"

using namespace dwl;

namespace {
const Digraph kC3(3, {{0, 1}, {1, 2}, {2, 0}});
const Digraph kK2 = biorient(Digraph(2, {{0, 1}}));
const Rational kThreeQuarters{3, 4};
}  // namespace

TEST_CASE("validate_separator examples") {
  CHECK(validate_separator(kK2, {0, 1}, kThreeQuarters, {{0}, {1}, {}}));
  CHECK_FALSE(validate_separator(kK2, {0, 1}, kThreeQuarters, {{}, {0}, {1}}));
  CHECK(validate_separator(kC3, {0, 1, 2}, kThreeQuarters, {{0}, {1}, {2}}));
  // Partition violations fail regardless of balance.
  CHECK_FALSE(validate_separator(kK2, {0, 1}, kThreeQuarters, {{0}, {0, 1}, {}}));
}

TEST_CASE("find_sep_exact examples") {
  auto r = find_sep_exact(kC3, {0, 1, 2}, kThreeQuarters);
  CHECK(r.s == VertexSet{0});
  CHECK(validate_separator(kC3, {0, 1, 2}, kThreeQuarters, r));

  Digraph edgeless(4);
  auto e = find_sep_exact(edgeless, edgeless.vertices(), kThreeQuarters);
  CHECK(e.s.empty());
  CHECK(validate_separator(edgeless, edgeless.vertices(), kThreeQuarters, e));

  Digraph k4bar = biorient(Digraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  auto k = find_sep_exact(k4bar, k4bar.vertices(), kThreeQuarters);
  CHECK(k.s.size() == 1);
  CHECK(validate_separator(k4bar, k4bar.vertices(), kThreeQuarters, k));

  Digraph big(17);
  CHECK_THROWS_AS(find_sep_exact(big, big.vertices(), kThreeQuarters), CapabilityError);
}

TEST_CASE("find_sep_exact matches the brute-force minimum") {
  for (int i = 0; i < 110; ++i) {
    int n = 1 + i % 6;
    Digraph g = testing::random_digraph(n, 0.15 + 0.1 * (i % 6), 6000 + i);
    unsigned umask = static_cast<unsigned>((i * 2654435761u) % (1u << n));
    VertexSet u;
    for (int v = 0; v < n; ++v)
      if (umask >> v & 1u) u.push_back(v);
    auto r = find_sep_exact(g, u, kThreeQuarters);
    REQUIRE(validate_separator(g, u, kThreeQuarters, r));
    CHECK(static_cast<int>(r.s.size()) == testing::brute_min_separator(g, u, kThreeQuarters));
  }
}

TEST_CASE("find_sep_heuristic always returns a valid separator") {
  const Rational alpha{7, 8};
  for (int i = 0; i < 120; ++i) {
    int n = 1 + i % 9;
    Digraph g = testing::random_digraph(n, 0.25, 7000 + i);
    VertexSet u = i % 3 == 0 ? g.vertices() : VertexSet{0};
    if (i % 3 == 2 && n >= 3) u = {0, 1, 2};
    auto r = find_sep_heuristic(g, u, alpha, i);
    CHECK(validate_separator(g, u, alpha, r));
  }

  auto c = find_sep_heuristic(kC3, kC3.vertices(), Rational{7, 8}, 1);
  CHECK(validate_separator(kC3, kC3.vertices(), Rational{7, 8}, c));
  CHECK(c.s.size() <= 3);

  // K2-bar with U = V admits nothing below the S=U fallback.
  auto f = find_sep_heuristic(kK2, {0, 1}, kThreeQuarters, 0);
  CHECK(f.s == VertexSet{0, 1});
  CHECK(f.u1.empty());
  CHECK(f.u2.empty());
}

TEST_CASE("dsn examples") {
  CHECK(dsn(Digraph(3), kThreeQuarters) == 0);
  CHECK(dsn(kC3, kThreeQuarters) == 1);
  Digraph k8bar = [&] {
    std::vector<Arc> arcs;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        if (i != j) arcs.emplace_back(i, j);
    return Digraph(8, arcs);
  }();
  CHECK(dsn(k8bar, kThreeQuarters, 12) == 2);
  CHECK_THROWS_AS(dsn(Digraph(13), kThreeQuarters, 12), CapabilityError);
}

TEST_CASE("separator_from_arboreal on fixed decompositions") {
  Digraph k4bar = biorient(Digraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  auto trivial = trivial_arboreal(k4bar, k4bar.vertices());
  auto r = separator_from_arboreal(k4bar, trivial, k4bar.vertices());
  CHECK(r.s == k4bar.vertices());
  CHECK(r.u1.empty());
  CHECK(r.u2.empty());
  CHECK(static_cast<int>(r.s.size()) == width(trivial) + 1);

  // Width-0 chain decomposition of the path 0->1->2->3.
  Digraph path(4, {{0, 1}, {1, 2}, {2, 3}});
  ArborealDecomposition chain;
  chain.skeleton.kind = SkeletonKind::Arborescence;
  chain.skeleton.node_count = 4;
  chain.skeleton.arcs = {{0, 1}, {1, 2}, {2, 3}};
  chain.node_bags = {{3}, {2}, {1}, {0}};
  chain.arc_bags = {{}, {}, {}};
  chain.universe = path.vertices();
  REQUIRE(validate_arboreal(path, chain).ok());
  REQUIRE(width(chain) == 0);
  auto rp = separator_from_arboreal(path, chain, path.vertices());
  CHECK(validate_separator(path, path.vertices(), kThreeQuarters, rp));
  CHECK(rp.s.size() <= 1);

  auto c3dec = dtw_exact_small(kC3).certificate;
  auto rc = separator_from_arboreal(kC3, c3dec, kC3.vertices());
  CHECK(validate_separator(kC3, kC3.vertices(), kThreeQuarters, rc));
  CHECK(rc.s.size() <= 2);
}

TEST_CASE("separator_from_arboreal is sound and small on oracle certificates") {
  for (int i = 0; i < 60; ++i) {
    int n = 1 + i % 5;
    Digraph g = testing::random_digraph(n, 0.35, 8000 + i);
    auto [w, cert] = dtw_exact_small(g);
    REQUIRE(validate_arboreal(g, cert).ok());
    for (unsigned umask = 0; umask < (1u << n); ++umask) {
      VertexSet u;
      for (int v = 0; v < n; ++v)
        if (umask >> v & 1u) u.push_back(v);
      auto r = separator_from_arboreal(g, cert, u);
      CHECK(validate_separator(g, u, kThreeQuarters, r));
      CHECK(static_cast<int>(r.s.size()) <= w + 1);
    }
  }
}

TEST_CASE("separator_from_arboreal bound holds for arbitrary valid decompositions") {
  // Not just oracle-optimal ones: extraction from any valid decomposition
  // stays within width+1 and 3/4 balance.
  for (int i = 0; i < 60; ++i) {
    int n = 2 + i % 6;
    Digraph g = testing::random_digraph(n, 0.3, 8600 + i);
    SeparatorStrategy strategy;
    strategy.mode = i % 2 ? SeparatorMode::Heuristic : SeparatorMode::Exact;
    strategy.rng_seed = i;
    ArborealDecomposition d = make_arbdec(g, g.vertices(), {}, strategy).decomposition;
    REQUIRE(validate_arboreal(g, d).ok());
    VertexSet u = i % 3 == 0 ? g.vertices() : VertexSet{0, n - 1};
    auto r = separator_from_arboreal(g, d, u);
    CHECK(validate_separator(g, u, kThreeQuarters, r));
    CHECK(static_cast<int>(r.s.size()) <= width(d) + 1);
  }
}

TEST_CASE("separator_from_arboreal rejects invalid decompositions") {
  ArborealDecomposition bad = trivial_arboreal(kC3, {0, 1});  // universe != V
  CHECK_THROWS_AS(separator_from_arboreal(kC3, bad, kC3.vertices()), InvalidInputError);
}

TEST_CASE("separator_from_arboreal on the empty graph") {
  Digraph empty(0);
  auto r = separator_from_arboreal(empty, trivial_arboreal(empty, {}), {});
  CHECK(r.s.empty());
  CHECK(validate_separator(empty, {}, kThreeQuarters, r));
}
