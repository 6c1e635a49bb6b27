"""Double domination bounds on maximal outerplanar graphs and 2-trees.

The heavy lifting lives in the compiled extension ``modd._modd``; this
package re-exports its public surface.
"""

from ._modd import (
    Coloring,
    DominationResult,
    Graph,
    InnerTriangulation,
    InvariantViolation,
    Method,
    OuterplaneEmbedding,
    PeelSequence,
    SolverReport,
    brute_force_gamma_x2,
    build_graph,
    closed_neighborhood,
    degree_set_double_domination,
    degree_two_vertices,
    dispatch_bound,
    exact_gamma_x2,
    generate_family_a,
    generate_family_u,
    generate_fan,
    generate_random_mop,
    internal_triangles,
    is_double_dominating,
    is_striped,
    peel_double_domination,
    peel_three_coloring,
    rainbow_double_domination,
    rainbow_four_coloring,
    read_graph_file,
    recognize_mop,
    recognize_two_tree,
    write_graph_file,
)

__all__ = [
    "Coloring",
    "DominationResult",
    "Graph",
    "InnerTriangulation",
    "InvariantViolation",
    "Method",
    "OuterplaneEmbedding",
    "PeelSequence",
    "SolverReport",
    "brute_force_gamma_x2",
    "build_graph",
    "closed_neighborhood",
    "degree_set_double_domination",
    "degree_two_vertices",
    "dispatch_bound",
    "exact_gamma_x2",
    "generate_family_a",
    "generate_family_u",
    "generate_fan",
    "generate_random_mop",
    "internal_triangles",
    "is_double_dominating",
    "is_striped",
    "peel_double_domination",
    "peel_three_coloring",
    "rainbow_double_domination",
    "rainbow_four_coloring",
    "read_graph_file",
    "recognize_mop",
    "recognize_two_tree",
    "write_graph_file",
]
