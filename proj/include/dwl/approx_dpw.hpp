#pragma once

#include "dwl/decomposition.hpp"
#include "dwl/separator.hpp"

namespace dwl {

struct DpwRunConfig {
  SeparatorStrategy strategy;
  int termination_threshold = 2;
  Rational alpha_prime{7, 8};  // must lie in (3/4, 1)
  bool debug_checks = false;

  static DpwRunConfig defaults_for(const Digraph& g);
};

/// max(2, smallest power of two >= ceil(log2(n)^1.5)).
int default_termination_threshold(int n);

struct RunTelemetry {
  int recursion_depth = 0;
  int max_separator_size = 0;
  int separator_count = 0;
  // make_arbdec only:
  int max_guard_size = 0;   // largest |Y| seen across invocations
  int max_node_budget = 0;  // max of |S|+|Y| (internal) and |W|+|Y| (leaf)
  Rational beta{1, 1};      // copied from the strategy, reporting only
};

/// Concatenates two directed path decompositions and adds S to every bag.
/// With both operands empty and S nonempty the result is the single bag S;
/// an empty operand is skipped. Given valid inputs over G[U1], G[U2] for a
/// separator (S;U1,U2), the result is a valid dpd of G[U1 ∪ U2 ∪ S].
DirectedPathDecomposition merge(const DirectedPathDecomposition& d1,
                                const DirectedPathDecomposition& d2, const VertexSet& s);

struct DpdRunResult {
  DirectedPathDecomposition decomposition;
  RunTelemetry telemetry;
};

/// Divide-and-conquer directed path decomposition of G[U]: below the
/// termination threshold returns the trivial decomposition, otherwise splits
/// on a balanced separator of G[U] and merges the recursive results. An empty
/// U yields a zero-node decomposition.
DpdRunResult make_dpdec(const Digraph& g, const VertexSet& u, const DpwRunConfig& cfg);

/// make_dpdec output reinterpreted over a DAG skeleton.
DagDecomposition approx_dagwidth(const Digraph& g, const DpwRunConfig& cfg);

/// dpd_to_kelly_path(normalize_dpd(make_dpdec(G))); width equals the
/// normalized dpd width.
KellyDecomposition approx_kellywidth(const Digraph& g, const DpwRunConfig& cfg);

}  // namespace dwl
