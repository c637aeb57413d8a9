"""Entanglements, friendly separations and canonical tree-decompositions.

Thin wrapper around the compiled extension. Vertex and element sets are
plain sorted id lists; separation families are lists of Separation.
"""

import json as _json

from ._core import (
    AxiomViolation,
    CapError,
    ContractError,
    Graph,
    InputError,
    Matroid,
    Separation,
    Tangle,
    TheoremViolation,
    TreeDecomposition,
    __version__,
    binary_matroid,
    bowtie,
    check_axiom_e,
    check_efficient_distinguishing,
    complete,
    corners,
    crosses,
    crossing_number,
    cycle,
    distinguishable,
    efficient_distinguishers,
    entanglement_union_oracle,
    family_friendly,
    farey,
    filter_efficient_tangle_distinguishers,
    friendly,
    friendly_oracle,
    glued_k4s,
    graph,
    graphic_matroid,
    grid,
    is_connected,
    matroid_friendly,
    max_entanglement,
    path,
    relabel,
    run_verification_suite_json,
    separations,
    tangles,
    tree_decomposition,
    tree_decomposition_dot,
    uniform_matroid,
    validate_tree_decomposition,
    verification_suites,
    verify_matroid_rank_axioms,
    verify_nested,
    wheel,
)


def verify_suite(suite, max_n=7):
    """Run one verification suite and return its report as a dict."""
    return _json.loads(run_verification_suite_json(suite, max_n))


__all__ = [
    "AxiomViolation",
    "CapError",
    "ContractError",
    "Graph",
    "InputError",
    "Matroid",
    "Separation",
    "Tangle",
    "TheoremViolation",
    "TreeDecomposition",
    "__version__",
    "binary_matroid",
    "bowtie",
    "check_axiom_e",
    "check_efficient_distinguishing",
    "complete",
    "corners",
    "crosses",
    "crossing_number",
    "cycle",
    "distinguishable",
    "efficient_distinguishers",
    "entanglement_union_oracle",
    "family_friendly",
    "farey",
    "filter_efficient_tangle_distinguishers",
    "friendly",
    "friendly_oracle",
    "glued_k4s",
    "graph",
    "graphic_matroid",
    "grid",
    "is_connected",
    "matroid_friendly",
    "max_entanglement",
    "path",
    "relabel",
    "run_verification_suite_json",
    "separations",
    "tangles",
    "tree_decomposition",
    "tree_decomposition_dot",
    "uniform_matroid",
    "validate_tree_decomposition",
    "verification_suites",
    "verify_matroid_rank_axioms",
    "verify_nested",
    "verify_suite",
    "wheel",
]
