#include "dwl/approx_dpw.hpp"

#include <cmath>

namespace dwl {

int default_termination_threshold(int n) {
  if (n <= 2) return 2;
  double target = std::ceil(std::pow(std::log2(static_cast<double>(n)), 1.5));
  int threshold = 1;
  while (threshold < static_cast<int>(target)) threshold *= 2;
  return std::max(2, threshold);
}

DpwRunConfig DpwRunConfig::defaults_for(const Digraph& g) {
  DpwRunConfig cfg;
  cfg.termination_threshold = default_termination_threshold(g.vertex_count());
  return cfg;
}

DirectedPathDecomposition merge(const DirectedPathDecomposition& d1,
                                const DirectedPathDecomposition& d2, const VertexSet& s) {
  DirectedPathDecomposition out;
  if (d1.bags.empty() && d2.bags.empty()) {
    if (!s.empty()) out.bags.push_back(s);
    return out;
  }
  out.bags.reserve(d1.bags.size() + d2.bags.size());
  for (const auto& bag : d1.bags) out.bags.push_back(set_union(bag, s));
  for (const auto& bag : d2.bags) out.bags.push_back(set_union(bag, s));
  return out;
}

namespace {

void check_alpha_prime(const Rational& a) {
  if (!(Rational(3, 4) < a) || !(a < Rational(1, 1)))
    throw InvalidInputError("alpha_prime must lie in (3/4, 1), got " + a.to_string());
}

DirectedPathDecomposition make_dpdec_rec(const Digraph& g, const VertexSet& u,
                                         const DpwRunConfig& cfg, RunTelemetry& tele, int depth) {
  tele.recursion_depth = std::max(tele.recursion_depth, depth);
  if (u.empty()) return {};
  Digraph sub = g.induced(u);
  if (static_cast<int>(u.size()) <= cfg.termination_threshold) return trivial_dpd(sub);

  SeparatorResult sep = find_sep(sub, u, cfg.alpha_prime, cfg.strategy);
  if (cfg.debug_checks && !validate_separator(sub, u, cfg.alpha_prime, sep))
    throw InvalidInputError("make_dpdec: strategy returned an invalid separator");
  tele.separator_count += 1;
  tele.max_separator_size = std::max(tele.max_separator_size, static_cast<int>(sep.s.size()));

  DirectedPathDecomposition d1 = make_dpdec_rec(g, sep.u1, cfg, tele, depth + 1);
  DirectedPathDecomposition d2 = make_dpdec_rec(g, sep.u2, cfg, tele, depth + 1);
  DirectedPathDecomposition merged = merge(d1, d2, sep.s);
  if (cfg.debug_checks && !validate_dpd(sub, merged).ok())
    throw InvalidInputError("make_dpdec: merge produced an invalid decomposition");
  return merged;
}

}  // namespace

DpdRunResult make_dpdec(const Digraph& g, const VertexSet& u, const DpwRunConfig& cfg) {
  check_alpha_prime(cfg.alpha_prime);
  if (cfg.termination_threshold < 1)
    throw InvalidInputError("termination_threshold must be >= 1");
  for (int v : u)
    if (!g.has_vertex(v)) throw InvalidInputError("make_dpdec: U not within V(G)");
  DpdRunResult result;
  result.telemetry.beta = cfg.strategy.beta;
  result.decomposition = make_dpdec_rec(g, u, cfg, result.telemetry, 0);
  return result;
}

DagDecomposition approx_dagwidth(const Digraph& g, const DpwRunConfig& cfg) {
  return make_dpdec(g, g.vertices(), cfg).decomposition.as_dag();
}

KellyDecomposition approx_kellywidth(const Digraph& g, const DpwRunConfig& cfg) {
  DirectedPathDecomposition dpd = make_dpdec(g, g.vertices(), cfg).decomposition;
  return dpd_to_kelly_path(normalize_dpd(dpd));
}

}  // namespace dwl
