"""List coloring of graphs whose lists have max-degree size."""

from ._core import (
    GeneratorError,
    Graph,
    GraphError,
    InvariantError,
    ParseError,
    connected_components,
    emit_graph,
    emit_lists,
    gen_lists,
    gen_named,
    gen_random_connected,
    gen_random_regular,
    list_color,
    max_degree,
    parse_graph,
    parse_lists,
    run_fuzz,
    solve_exact,
    verify_coloring,
)

__all__ = [
    "GeneratorError",
    "Graph",
    "GraphError",
    "InvariantError",
    "ParseError",
    "connected_components",
    "emit_graph",
    "emit_lists",
    "gen_lists",
    "gen_named",
    "gen_random_connected",
    "gen_random_regular",
    "list_color",
    "max_degree",
    "parse_graph",
    "parse_lists",
    "run_fuzz",
    "solve_exact",
    "verify_coloring",
]
