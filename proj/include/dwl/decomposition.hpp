#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dwl/digraph.hpp"

namespace dwl {

enum class SkeletonKind { Dag, Path, Arborescence };

std::string skeleton_kind_name(SkeletonKind k);

/// Decomposition skeleton: an acyclic node/arc structure. Node ids are dense
/// 0..node_count-1. kind=Path additionally requires a single directed path,
/// kind=Arborescence a unique root with a unique walk to every node.
struct Skeleton {
  SkeletonKind kind = SkeletonKind::Dag;
  int node_count = 0;
  std::vector<std::pair<int, int>> arcs;  // sorted

  static Skeleton path(int length);

  /// Throws InvalidInputError when the structure does not match the kind.
  void check() const;

  std::vector<int> roots() const;
  std::vector<int> sinks() const;
  std::vector<std::vector<int>> children() const;
  /// reachable[i] = node ids j with i ⪯ j (reflexive descendants).
  std::vector<std::vector<int>> descendants() const;
};

struct DagDecomposition {
  Skeleton skeleton;  // kind Dag (Path accepted: a path is a DAG)
  std::vector<VertexSet> node_bags;
};

/// Path skeleton is implicit: bags[0] -> bags[1] -> ... -> bags[l-1].
struct DirectedPathDecomposition {
  std::vector<VertexSet> bags;

  DagDecomposition as_dag() const;
};

struct KellyDecomposition {
  Skeleton skeleton;
  std::vector<VertexSet> node_bags;   // W_i, a partition of V(G)
  std::vector<VertexSet> guard_bags;  // X_i

  bool is_path() const;
};

struct ArborealDecomposition {
  Skeleton skeleton;                 // kind Arborescence
  std::vector<VertexSet> node_bags;  // partition of `universe`
  std::vector<VertexSet> arc_bags;   // aligned with skeleton.arcs
  VertexSet universe;
};

/// One verdict per validity condition; a failure carries the smallest
/// offending object in the fixed scan order.
struct Witness {
  enum class Kind { Vertex, GraphArc, SkeletonArc, Node, NodeTriple };
  Kind kind;
  std::vector<int> values;

  std::string to_string() const;
};

struct Verdict {
  std::string condition;
  bool pass = true;
  std::optional<Witness> witness;
};

struct ValidationReport {
  std::vector<Verdict> verdicts;

  bool ok() const;
  const Verdict* find(const std::string& condition) const;
  std::string to_string() const;
};

ValidationReport validate_dag_decomposition(const Digraph& g, const DagDecomposition& d);
ValidationReport validate_dpd(const Digraph& g, const DirectedPathDecomposition& d);
ValidationReport validate_kelly(const Digraph& g, const KellyDecomposition& d);
ValidationReport validate_arboreal(const Digraph& g, const ArborealDecomposition& d);

int width(const DagDecomposition& d);
int width(const DirectedPathDecomposition& d);
/// max |W_i ∪ X_i|
int width(const KellyDecomposition& d);
/// max |W_i ∪ X_{∼i}| - 1, where X_{∼i} unions the bags of arcs incident to i.
int width(const ArborealDecomposition& d);

/// Removes bags contained in a neighbor until none remain. Keeps validity,
/// never increases width, idempotent.
DirectedPathDecomposition normalize_dpd(const DirectedPathDecomposition& d);

/// W'_1 = W_1, W'_i = W_i \ W_{i-1}; X'_1 = ∅, X'_i = W_i ∩ W_{i-1}.
/// Requires a normalized valid dpd; width is preserved exactly.
KellyDecomposition dpd_to_kelly_path(const DirectedPathDecomposition& d);

/// W_i = W'_i ∪ X'_i. Requires a path-skeleton Kelly decomposition; width is
/// preserved exactly.
DirectedPathDecomposition kelly_path_to_dpd(const KellyDecomposition& d);

enum class DecompositionKind { Dpd, Dag, Kelly, Arboreal };

std::string decomposition_kind_name(DecompositionKind k);

/// Single node holding all of U. For non-arboreal kinds U must equal V(G).
DagDecomposition trivial_dag_decomposition(const Digraph& g);
DirectedPathDecomposition trivial_dpd(const Digraph& g);
KellyDecomposition trivial_kelly(const Digraph& g);
ArborealDecomposition trivial_arboreal(const Digraph& g, const VertexSet& universe);

}  // namespace dwl
