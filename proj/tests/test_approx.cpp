#include <cmath>

#include "doctest.h"
#include "dwl/approx_dpw.hpp"
#include "dwl/approx_dtw.hpp"
#include "dwl/oracles.hpp"
#include "oracle_helpers.hpp"

using namespace dwl;

namespace {
const Digraph kC3(3, {{0, 1}, {1, 2}, {2, 0}});
const Digraph kDag2(2, {{0, 1}});

DpwRunConfig config(SeparatorMode mode, int threshold, unsigned long long seed = 0) {
  DpwRunConfig cfg;
  cfg.strategy.mode = mode;
  cfg.strategy.rng_seed = seed;
  cfg.termination_threshold = threshold;
  cfg.debug_checks = true;
  return cfg;
}
}  // namespace

TEST_CASE("merge examples") {
  auto m1 = merge({{{0}}}, {{{1}}}, {});
  CHECK(m1.bags == std::vector<VertexSet>{{0}, {1}});
  CHECK(validate_dpd(kDag2, m1).ok());

  auto m2 = merge({{{1}}}, {{{2}}}, {0});
  CHECK(m2.bags == std::vector<VertexSet>{{0, 1}, {0, 2}});
  CHECK(validate_dpd(kC3, m2).ok());
  CHECK(width(m2) == 2);

  auto m3 = merge({}, {}, {0});
  CHECK(m3.bags == std::vector<VertexSet>{{0}});
  CHECK(merge({}, {}, {}).bags.empty());
}

TEST_CASE("make_dpdec fixed cases") {
  auto r = make_dpdec(kC3, kC3.vertices(), config(SeparatorMode::Exact, 1));
  CHECK(validate_dpd(kC3, r.decomposition).ok());
  CHECK(width(r.decomposition) <= 2);
  CHECK(dpw_by_ordering(kC3).width == 2);

  Digraph small(2, {{0, 1}});
  auto t = make_dpdec(small, small.vertices(), config(SeparatorMode::Exact, 4));
  CHECK(t.decomposition.bags == std::vector<VertexSet>{{0, 1}});
  CHECK(t.telemetry.recursion_depth == 0);

  Digraph edgeless(4);
  auto e = make_dpdec(edgeless, edgeless.vertices(), config(SeparatorMode::Exact, 1));
  CHECK(validate_dpd(edgeless, e.decomposition).ok());
  CHECK(width(e.decomposition) == 1);

  auto empty = make_dpdec(kC3, {}, config(SeparatorMode::Exact, 1));
  CHECK(empty.decomposition.bags.empty());
}

TEST_CASE("make_dpdec rejects bad configuration") {
  DpwRunConfig cfg = config(SeparatorMode::Exact, 0);
  CHECK_THROWS_AS(make_dpdec(kC3, kC3.vertices(), cfg), InvalidInputError);
  cfg = config(SeparatorMode::Exact, 1);
  cfg.alpha_prime = Rational{1, 2};
  CHECK_THROWS_AS(make_dpdec(kC3, kC3.vertices(), cfg), InvalidInputError);
  cfg.alpha_prime = Rational{1, 1};
  CHECK_THROWS_AS(make_dpdec(kC3, kC3.vertices(), cfg), InvalidInputError);
}

TEST_CASE("make_dpdec propagates exact-strategy capability errors") {
  Digraph big(20);
  CHECK_THROWS_AS(make_dpdec(big, big.vertices(), config(SeparatorMode::Exact, 1)),
                  CapabilityError);
  // Heuristic handles the same instance.
  CHECK(validate_dpd(big, make_dpdec(big, big.vertices(), config(SeparatorMode::Heuristic, 1))
                              .decomposition)
            .ok());
}

TEST_CASE("default termination threshold") {
  CHECK(default_termination_threshold(1) == 2);
  CHECK(default_termination_threshold(2) == 2);
  CHECK(default_termination_threshold(8) == 8);     // ceil(3^1.5)=6 -> 8
  CHECK(default_termination_threshold(1024) == 32);  // ceil(10^1.5)=32
  CHECK(DpwRunConfig::defaults_for(kC3).termination_threshold ==
        default_termination_threshold(3));
}

TEST_CASE("dpd_to_kelly_path requires a normalized input") {
  CHECK_THROWS_AS(dpd_to_kelly_path({{{0, 1}, {1}}}), InvalidInputError);
}

TEST_CASE("approx adapters on fixed graphs") {
  Digraph k2bar = biorient(kDag2);
  auto dag = approx_dagwidth(kC3, config(SeparatorMode::Exact, 1));
  CHECK(validate_dag_decomposition(kC3, dag).ok());
  CHECK(width(dag) <= 2);

  auto dag2 = approx_dagwidth(k2bar, config(SeparatorMode::Exact, 1));
  CHECK(validate_dag_decomposition(k2bar, dag2).ok());
  CHECK(width(dag2) >= dagwidth_by_game(k2bar));  // = 2

  Digraph single(1);
  CHECK(width(approx_dagwidth(single, config(SeparatorMode::Exact, 1))) == 1);

  auto kelly = approx_kellywidth(k2bar, config(SeparatorMode::Exact, 1));
  CHECK(validate_kelly(k2bar, kelly).ok());
  CHECK(width(kelly) == 2);

  Digraph edgeless3(3);
  CHECK(width(approx_kellywidth(edgeless3, config(SeparatorMode::Exact, 1))) == 1);
  CHECK(width(approx_kellywidth(single, config(SeparatorMode::Exact, 1))) == 1);
}

TEST_CASE("make_dpdec validity, accounting, and depth bound across strategies") {
  for (int i = 0; i < 160; ++i) {
    int n = 1 + i % 8;
    Digraph g = testing::random_digraph(n, 0.1 + 0.1 * (i % 8), 9000 + i);
    for (SeparatorMode mode :
         {SeparatorMode::Exact, SeparatorMode::Heuristic, SeparatorMode::Trivial}) {
      DpwRunConfig cfg = config(mode, 1 + i % 3, i);
      auto [dec, tele] = make_dpdec(g, g.vertices(), cfg);
      CHECK(validate_dpd(g, dec).ok());
      CHECK(width(dec) <=
            tele.recursion_depth * tele.max_separator_size + cfg.termination_threshold);
      if (mode == SeparatorMode::Exact && n >= 1) {
        double a = cfg.alpha_prime.to_double();
        int bound = static_cast<int>(std::ceil(std::log(std::max(2, n)) / std::log(1.0 / a))) + 1;
        CHECK(tele.recursion_depth <= bound);
      }
      auto kelly = approx_kellywidth(g, cfg);
      CHECK(validate_kelly(g, kelly).ok());
      CHECK(width(kelly) == width(normalize_dpd(dec)));
      CHECK(validate_dag_decomposition(g, approx_dagwidth(g, cfg)).ok());
    }
  }
}

TEST_CASE("refine examples") {
  auto r = refine(kC3, {1, 2}, {0}, {1});
  REQUIRE(r.parts.size() == 1);
  CHECK(r.parts[0].part == VertexSet{2});
  CHECK(r.parts[0].parent_component == VertexSet{2});

  auto sub = refine(kC3, {1}, {0}, {1, 2});  // W inside S: empty refinement
  CHECK(sub.parts.empty());

  auto d = refine(kDag2, {0, 1}, {}, {0});
  REQUIRE(d.parts.size() == 1);
  CHECK(d.parts[0].part == VertexSet{1});
  CHECK(d.parts[0].parent_component == VertexSet{1});

  CHECK_THROWS_AS(refine(kC3, {0}, {}, {1}), InvalidInputError);     // S misses W
  CHECK_THROWS_AS(refine(kC3, {0, 1}, {}, {0}), InvalidInputError);  // W cuts an SCC: not normal
}

TEST_CASE("glue examples") {
  // Degenerate glue: no parts, W = S ∩ W.
  Refinement empty;
  empty.w = {0};
  empty.y = {};
  empty.s = {0, 2};
  auto g0 = glue({}, empty);
  CHECK(g0.node_bags == std::vector<VertexSet>{{0}});
  CHECK(validate_arboreal(kC3, g0).ok());

  // Hand-built refinement with a single two-vertex part.
  Refinement r;
  r.w = {0, 1, 2};
  r.y = {};
  r.s = {0};
  r.parts = {{{1, 2}, {1, 2}}};
  auto child = trivial_arboreal(kC3, {1, 2});
  auto glued = glue({child}, r, &kC3);
  CHECK(glued.node_bags == std::vector<VertexSet>{{0}, {1, 2}});
  CHECK(glued.arc_bags == std::vector<VertexSet>{{0}});
  CHECK(validate_arboreal(kC3, glued).ok());
  CHECK(width(glued) == 2);

  // Mismatched child count.
  CHECK_THROWS_AS(glue({}, r), InvalidInputError);

  Refinement rd;
  rd.w = {0, 1};
  rd.y = {};
  rd.s = {0};
  rd.parts = {{{1}, {1}}};
  auto gd = glue({trivial_arboreal(kDag2, {1})}, rd, &kDag2);
  CHECK(validate_arboreal(kDag2, gd).ok());
  CHECK(width(gd) <= 1);
}

TEST_CASE("make_arbdec fixed cases") {
  SeparatorStrategy exact;
  auto r = make_arbdec(kC3, kC3.vertices(), {}, exact, true);
  CHECK(validate_arboreal(kC3, r.decomposition).ok());
  CHECK(width(r.decomposition) <= 2);
  CHECK(dtw_exact_small(kC3).width == 1);

  Digraph path(3, {{0, 1}, {1, 2}});
  auto p = make_arbdec(path, path.vertices(), {}, exact, true);
  CHECK(validate_arboreal(path, p.decomposition).ok());
  CHECK(width(p.decomposition) <= 1);

  // |W| <= |Y| at entry returns the trivial decomposition w.r.t. W.
  auto t = make_arbdec(kC3, {2}, {0}, exact, true);
  CHECK(t.decomposition.node_bags == std::vector<VertexSet>{{2}});
  CHECK(t.decomposition.universe == VertexSet{2});
}

TEST_CASE("make_arbdec validity, accounting, and guard growth across strategies") {
  for (int i = 0; i < 160; ++i) {
    int n = 1 + i % 8;
    Digraph g = testing::random_digraph(n, 0.1 + 0.1 * (i % 8), 11000 + i);
    for (SeparatorMode mode :
         {SeparatorMode::Exact, SeparatorMode::Heuristic, SeparatorMode::Trivial}) {
      SeparatorStrategy strategy;
      strategy.mode = mode;
      strategy.rng_seed = i;
      auto [dec, tele] = make_arbdec(g, g.vertices(), {}, strategy, true);
      CHECK(validate_arboreal(g, dec).ok());
      CHECK(dec.universe == g.vertices());
      if (n > 0) CHECK(width(dec) <= tele.max_node_budget - 1);
      if (mode == SeparatorMode::Exact && tele.max_separator_size > 0)
        CHECK(tele.max_guard_size <= 8 * tele.max_separator_size);
    }
  }
}
