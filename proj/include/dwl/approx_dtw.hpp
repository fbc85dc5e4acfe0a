#pragma once

#include "dwl/approx_dpw.hpp"
#include "dwl/decomposition.hpp"
#include "dwl/separator.hpp"

namespace dwl {

/// Splitting of a Y-normal set W by a separator S: the strongly connected
/// components of C_i minus Y that lie inside W, for each component C_i of
/// G minus S, each tagged with its parent component.
struct RefinementPart {
  VertexSet part;              // W_j
  VertexSet parent_component;  // the component of G-S it came from
};

struct Refinement {
  std::vector<RefinementPart> parts;
  VertexSet w, y, s;  // the triple this refines
};

/// Preconditions: W is Y-normal and S ∩ W nonempty. Parts are ordered by the
/// topological position of their parent component, then by the part's own
/// topological position, so downstream skeletons are deterministic.
Refinement refine(const Digraph& g, const VertexSet& w, const VertexSet& y, const VertexSet& s);

/// Attaches each child decomposition (over the matching refinement part) under
/// a fresh root: root bag S ∩ W, arc bag to child i set to
/// S ∪ (Y ∩ parent_component_i). Result is an arboreal decomposition with
/// respect to W.
ArborealDecomposition glue(const std::vector<ArborealDecomposition>& children,
                           const Refinement& refinement, const Digraph* debug_graph = nullptr);

struct ArbRunResult {
  ArborealDecomposition decomposition;
  RunTelemetry telemetry;
};

/// Divide-and-conquer arboreal decomposition with respect to W: terminates
/// with the trivial decomposition once |W| <= |Y|; otherwise separates the
/// guard set Y on the full graph with alpha = 7/8 (augmenting S by the
/// smallest vertex of W when it misses W), refines, recurses, and glues.
/// The top-level call is make_arbdec(G, V(G), ∅).
ArbRunResult make_arbdec(const Digraph& g, const VertexSet& w, const VertexSet& y,
                         const SeparatorStrategy& strategy, bool debug_checks = false);

}  // namespace dwl
