#pragma once

#include <optional>

#include "dwl/decomposition.hpp"
#include "dwl/digraph.hpp"

namespace dwl {

/// (S; U1, U2): S together with a partition of V(G)-S such that S guards U2
/// and each part holds at most alpha*|U| vertices of the balance set U.
struct SeparatorResult {
  VertexSet s;
  VertexSet u1;
  VertexSet u2;
};

enum class SeparatorMode { Exact, Heuristic, Trivial };

std::string separator_mode_name(SeparatorMode m);

struct SeparatorStrategy {
  SeparatorMode mode = SeparatorMode::Exact;
  Rational alpha{7, 8};
  int size_cap = 16;        // exact-mode vertex cap
  Rational beta{1, 1};      // reporting constant only, never used in logic
  unsigned long long rng_seed = 0;
};

/// Checks the balance bounds with exact rational arithmetic. For |U| <= 1 the
/// balance bounds are treated as vacuous (partition and guarding still apply).
bool validate_separator(const Digraph& g, const VertexSet& u, const Rational& alpha,
                        const SeparatorResult& r);

/// Minimum-cardinality S admitting a valid split. Enumerates S by increasing
/// size, lexicographically within each size; U2 ranges over out-closed unions
/// of strongly connected components of G-S; ties resolved by the
/// lexicographically smallest U2. Throws CapabilityError above `size_cap`.
SeparatorResult find_sep_exact(const Digraph& g, const VertexSet& u, const Rational& alpha,
                               int size_cap = 16);

/// Valid but not necessarily small: samples vertex pairs, takes minimum vertex
/// cuts (unit-capacity max-flow), grows an out-closed U2 from the sink side of
/// the condensation; falls back to S=U (always valid). Deterministic per seed.
SeparatorResult find_sep_heuristic(const Digraph& g, const VertexSet& u, const Rational& alpha,
                                   unsigned long long seed = 0);

/// Dispatch per strategy.mode; Trivial returns the S=U fallback directly.
SeparatorResult find_sep(const Digraph& g, const VertexSet& u, const Rational& alpha,
                         const SeparatorStrategy& strategy);

/// alpha-directed separator number: max over all U ⊆ V(G) of the minimum
/// separator size for U. Exact; throws CapabilityError above `n_cap`.
int dsn(const Digraph& g, const Rational& alpha, int n_cap = 12);

/// Extracts a 3/4-balanced separator of U of size at most width(D)+1 from a
/// valid arboreal decomposition: S is the bag-plus-incident-arc-bags of the
/// deepest node whose subtree holds at least half of U, and U1/U2 group the
/// components of G-S so that both balance bounds hold.
SeparatorResult separator_from_arboreal(const Digraph& g, const ArborealDecomposition& d,
                                        const VertexSet& u);

}  // namespace dwl
