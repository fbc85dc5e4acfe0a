#pragma once

#include <utility>
#include <vector>

#include "dwl/vertex_set.hpp"

namespace dwl {

/// Finite simple digraph: no self-loops, no parallel arcs.
///
/// Vertex identities are stable under induced-subgraph extraction: a subgraph
/// keeps the parent's vertex ids, so sets computed on a subgraph (separators,
/// decomposition bags) are directly meaningful in the parent. A graph built
/// from scratch has vertices 0..n-1. All values are immutable after
/// construction and all operations here are pure, so concurrent reads are
/// safe.
class Digraph {
public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, std::vector<Arc> arcs);

  /// Subgraph-style constructor over an explicit vertex id universe.
  static Digraph over_vertices(VertexSet vertices, std::vector<Arc> arcs);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const VertexSet& vertices() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  bool has_vertex(int v) const;
  bool has_arc(int u, int v) const;
  const std::vector<int>& out_neighbors(int v) const;
  const std::vector<int>& in_neighbors(int v) const;

  /// Induced subgraph on `keep` (ids preserved).
  Digraph induced(const VertexSet& keep) const;

  /// True iff ids are exactly 0..n-1 (a "root" graph, serializable).
  bool has_dense_ids() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.vertices_ == b.vertices_ && a.arcs_ == b.arcs_;
  }

private:
  int index_of(int v) const;

  VertexSet vertices_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_, in_;  // by local index, neighbor ids sorted
  std::vector<int> local_;                  // id -> local index, -1 if absent
};

/// Strongly connected components in a topological order: for i < j no arc has
/// tail in component j and head in component i. Deterministic: Kahn order with
/// ties broken by smallest original vertex id in the component.
struct SccCondensation {
  std::vector<VertexSet> components;
};

SccCondensation scc_condensation(const Digraph& g);

/// Vertices reachable from `sources` along directed paths avoiding `blocked`
/// (sources included). Precondition: sources and blocked disjoint.
VertexSet reachable_set(const Digraph& g, const VertexSet& sources, const VertexSet& blocked);

/// X guards W: disjoint, and every arc leaving W lands in X.
bool is_guarding(const Digraph& g, const VertexSet& w, const VertexSet& x);

/// W is X-normal: disjoint, and no directed path in G minus X leaves W and
/// later returns to it.
bool is_normal(const Digraph& g, const VertexSet& w, const VertexSet& x);

/// Symmetric closure: every arc gains its reverse.
Digraph biorient(const Digraph& g);

}  // namespace dwl
