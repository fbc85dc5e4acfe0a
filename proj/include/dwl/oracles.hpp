#pragma once

#include <optional>

#include "dwl/decomposition.hpp"
#include "dwl/digraph.hpp"

namespace dwl {

/// Exact-computation size caps, overridable via DWL_EXACT_CAPS
/// ("dtw=5,games=8,orderings=12"; the orderings key raises both ordering
/// oracles).
struct OracleCaps {
  int dtw = 5;
  int games = 8;
  int orderings = 12;    // dpw layout search
  int elimination = 9;   // Kelly elimination search
};

OracleCaps parse_oracle_caps(const std::string& text);

/// Minimum number of cops that capture a visible, dynamic robber in the
/// monotone game: cops announce their next placement, the robber runs along
/// any path free of standing cops, his territory may never grow and cops
/// never reoccupy vacated vertices. Equals DAG-width.
int dagwidth_by_game(const Digraph& g, int n_cap = 8);

/// Minimum number of cops that clear an invisible, inert robber in the
/// monotone game: contamination spreads only from vertices a cop is about to
/// land on, along paths free of standing cops, and may never grow. Equals
/// Kelly-width.
int kellywidth_by_game(const Digraph& g, int n_cap = 8);

/// A vertex order with the width it realizes: eliminating a vertex connects
/// its remaining in-neighbors to its remaining out-neighbors; the support of
/// a vertex is its out-degree among the not-yet-eliminated at its turn.
struct EliminationOrdering {
  std::vector<int> order;
  std::vector<int> supports;  // aligned with order
  int width = 0;              // max support
};

/// Evaluates a full ordering (throws InvalidInputError if it is not a
/// permutation of V).
EliminationOrdering elimination_support_width(const Digraph& g, const std::vector<int>& order);

/// Min-support-first greedy; cheap upper bound for large instances.
EliminationOrdering greedy_elimination_ordering(const Digraph& g);

struct KellyEliminationResult {
  int width;  // min-max support + 1
  EliminationOrdering ordering;
};

/// Exact Kelly-width by subset DP over elimination prefixes; lexicographically
/// least optimal ordering.
KellyEliminationResult kellywidth_by_elimination(const Digraph& g, int n_cap = 9);

struct DpwResult {
  int width;
  DirectedPathDecomposition certificate;
};

/// Decision procedure: is there a vertex order whose every layout bag has at
/// most w vertices? Bags: placing v after prefix P costs {v} plus every placed
/// vertex that still has an in-neighbor outside P. Explores only prefixes
/// within the bound; `state_budget` caps the number of memoized prefixes.
bool dpw_at_most(const Digraph& g, int w, std::size_t state_budget = 50'000'000);

/// Exact directed pathwidth (max-bag convention) by iterative deepening over
/// dpw_at_most; the certificate is the bag sequence of the lexicographically
/// least optimal order and always validates.
DpwResult dpw_by_ordering(const Digraph& g, int n_cap = 12);

struct DtwResult {
  int width;
  ArborealDecomposition certificate;
};

/// Exact directed treewidth by iterative deepening on the width bound with a
/// memoized search over (subtree universe, incoming arc bag) states.
DtwResult dtw_exact_small(const Digraph& g, int n_cap = 5);

}  // namespace dwl
