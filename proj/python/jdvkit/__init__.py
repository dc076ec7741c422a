"""Joint degree vectors: computation, graphicality, constructions and support bounds."""

from ._core import (
    Graph,
    InputError,
    Jdv,
    alpha_prime,
    augmented_half_graph,
    bound_reports,
    bounds_csv,
    check_graphical,
    continuous_feasibility,
    degree_profile,
    degree_sum_bound,
    diagnostics,
    half_graph,
    half_graph_support_size,
    jdv_of,
    limit_constant,
    max_support_exhaustive,
    maximize_f,
    pair_weights,
    solve_beta0,
    solve_discrete_relaxation,
    support,
    verify_chain,
    weighted_degree_sum,
)

__all__ = [
    "Graph",
    "InputError",
    "Jdv",
    "alpha_prime",
    "augmented_half_graph",
    "bound_reports",
    "bounds_csv",
    "check_graphical",
    "continuous_feasibility",
    "degree_profile",
    "degree_sum_bound",
    "diagnostics",
    "half_graph",
    "half_graph_support_size",
    "jdv_of",
    "limit_constant",
    "max_support_exhaustive",
    "maximize_f",
    "pair_weights",
    "solve_beta0",
    "solve_discrete_relaxation",
    "support",
    "verify_chain",
    "weighted_degree_sum",
]
