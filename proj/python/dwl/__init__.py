"""Digraph width decompositions: approximation algorithms, validators, and
exact small-instance oracles for directed pathwidth, DAG-width, Kelly-width,
and directed treewidth."""

from dwl._core import (
    Digraph,
    Skeleton,
    SeparatorResult,
    SeparatorStrategy,
    RunTelemetry,
    ValidationReport,
    DirectedPathDecomposition,
    DagDecomposition,
    KellyDecomposition,
    ArborealDecomposition,
    EliminationOrdering,
    Refinement,
    scc_condensation,
    reachable_set,
    is_guarding,
    is_normal,
    biorient,
    validate_dpd,
    validate_dag_decomposition,
    validate_kelly,
    validate_arboreal,
    normalize_dpd,
    dpd_to_kelly_path,
    kelly_path_to_dpd,
    trivial_dpd,
    trivial_dag_decomposition,
    trivial_kelly,
    trivial_arboreal,
    validate_separator,
    find_sep_exact,
    find_sep_heuristic,
    dsn,
    separator_from_arboreal,
    make_dpdec,
    approx_dagwidth,
    approx_kellywidth,
    merge,
    refine,
    glue,
    make_arbdec,
    dagwidth_by_game,
    kellywidth_by_game,
    kellywidth_by_elimination,
    elimination_support_width,
    greedy_elimination_ordering,
    dpw_by_ordering,
    dpw_at_most,
    dtw_exact_small,
    gen_family,
    family_names,
    parse_digraph,
    serialize_digraph,
    decomposition_to_json,
    decomposition_from_json,
)

__all__ = [name for name in dir() if not name.startswith("_")]
