#include "dwl/approx_dtw.hpp"

#include <algorithm>

namespace dwl {

Refinement refine(const Digraph& g, const VertexSet& w, const VertexSet& y, const VertexSet& s) {
  if (!is_normal(g, w, y)) throw InvalidInputError("refine: W is not Y-normal");
  if (set_disjoint(s, w)) throw InvalidInputError("refine: S must intersect W");

  Refinement r;
  r.w = w;
  r.y = y;
  r.s = s;
  auto outer = scc_condensation(g.induced(set_diff(g.vertices(), s))).components;
  for (const auto& comp : outer) {
    VertexSet inner_universe = set_diff(comp, y);
    if (inner_universe.empty()) continue;
    auto inner = scc_condensation(g.induced(inner_universe)).components;
    for (const auto& part : inner)
      if (set_subset(part, w)) r.parts.push_back({part, comp});
  }
  return r;
}

ArborealDecomposition glue(const std::vector<ArborealDecomposition>& children,
                           const Refinement& refinement, const Digraph* debug_graph) {
  if (children.size() != refinement.parts.size())
    throw InvalidInputError("glue: child count does not match refinement parts");
  if (debug_graph) {
    for (size_t i = 0; i < children.size(); ++i) {
      if (children[i].universe != refinement.parts[i].part ||
          !validate_arboreal(*debug_graph, children[i]).ok())
        throw InvalidInputError("glue: child " + std::to_string(i) +
                                " is not a valid decomposition of its part");
    }
  }

  ArborealDecomposition out;
  out.skeleton.kind = SkeletonKind::Arborescence;
  out.universe = refinement.w;
  out.node_bags.push_back(set_intersect(refinement.s, refinement.w));
  out.skeleton.node_count = 1;

  for (size_t i = 0; i < children.size(); ++i) {
    const ArborealDecomposition& child = children[i];
    if (child.skeleton.node_count == 0)
      throw InvalidInputError("glue: child " + std::to_string(i) + " has no nodes");
    int offset = out.skeleton.node_count;
    out.skeleton.node_count += child.skeleton.node_count;
    for (const auto& bag : child.node_bags) out.node_bags.push_back(bag);
    // Child root is its unique node with no incoming arc, shifted by offset.
    out.skeleton.arcs.emplace_back(0, offset + child.skeleton.roots().front());
    out.arc_bags.push_back(
        set_union(refinement.s, set_intersect(refinement.y, refinement.parts[i].parent_component)));
    for (size_t e = 0; e < child.skeleton.arcs.size(); ++e) {
      auto [a, b] = child.skeleton.arcs[e];
      out.skeleton.arcs.emplace_back(offset + a, offset + b);
      out.arc_bags.push_back(child.arc_bags[e]);
    }
  }
  // Keep skeleton arcs sorted with bags aligned.
  std::vector<size_t> order(out.skeleton.arcs.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return out.skeleton.arcs[a] < out.skeleton.arcs[b];
  });
  std::vector<std::pair<int, int>> arcs;
  std::vector<VertexSet> bags;
  for (size_t i : order) {
    arcs.push_back(out.skeleton.arcs[i]);
    bags.push_back(out.arc_bags[i]);
  }
  out.skeleton.arcs = std::move(arcs);
  out.arc_bags = std::move(bags);
  return out;
}

namespace {

ArborealDecomposition make_arbdec_rec(const Digraph& g, const VertexSet& w, const VertexSet& y,
                                      const SeparatorStrategy& strategy, bool debug,
                                      RunTelemetry& tele, int depth) {
  tele.recursion_depth = std::max(tele.recursion_depth, depth);
  tele.max_guard_size = std::max(tele.max_guard_size, static_cast<int>(y.size()));
  if (debug && !is_normal(g, w, y))
    throw InvalidInputError("make_arbdec: W is not Y-normal at recursion entry");

  if (w.size() <= y.size()) {
    tele.max_node_budget =
        std::max(tele.max_node_budget, static_cast<int>(w.size() + y.size()));
    return trivial_arboreal(g, w);
  }

  const Rational alpha(7, 8);
  SeparatorResult sep = find_sep(g, y, alpha, strategy);
  VertexSet s = sep.s;
  if (set_disjoint(s, w)) s = set_union(s, {w.front()});
  tele.separator_count += 1;
  tele.max_separator_size = std::max(tele.max_separator_size, static_cast<int>(s.size()));
  tele.max_node_budget = std::max(tele.max_node_budget, static_cast<int>(s.size() + y.size()));

  Refinement r = refine(g, w, y, s);
  std::vector<ArborealDecomposition> children;
  children.reserve(r.parts.size());
  for (const auto& part : r.parts) {
    VertexSet yj = set_union(s, set_intersect(y, part.parent_component));
    children.push_back(make_arbdec_rec(g, part.part, yj, strategy, debug, tele, depth + 1));
  }
  return glue(children, r, debug ? &g : nullptr);
}

}  // namespace

ArbRunResult make_arbdec(const Digraph& g, const VertexSet& w, const VertexSet& y,
                         const SeparatorStrategy& strategy, bool debug_checks) {
  if (!is_normal(g, w, y)) throw InvalidInputError("make_arbdec: W must be Y-normal");
  ArbRunResult result;
  result.telemetry.beta = strategy.beta;
  result.decomposition = make_arbdec_rec(g, w, y, strategy, debug_checks, result.telemetry, 0);
  return result;
}

}  // namespace dwl
