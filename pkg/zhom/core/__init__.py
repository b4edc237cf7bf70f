from .builders import (
    bipartisation,
    coloring,
    complete,
    complete_bipartite,
    cycle,
    diag,
    disjoint_union,
    edgeless,
    fourier_grid,
    fourier_matrix,
    generalized_fourier,
    graph_suite,
    h4,
    hadamard,
    kron,
    kron_grid,
    path,
    permuted,
    random_multigraph,
    random_permutation,
    random_simple_graph,
    scaled,
    thicken,
    vertex_cover,
)
from .entry import PureEntry, format_entry, parse_entry
from .graph import GraphComponent, MultiGraph, graph_components, two_coloring
from .io import (
    format_graph,
    format_matrix,
    format_poly,
    parse_graph,
    parse_matrix,
    parse_poly,
    read_graph,
    read_matrix,
    read_poly,
)
from .matrix import BipartiteInfo, EntryGrid, PureMatrix, as_grid, bipartite_split, components, grid_modulus
from .pair import EvalPair
from .permutation import Permutation

__all__ = [
    "PureEntry",
    "PureMatrix",
    "EntryGrid",
    "MultiGraph",
    "GraphComponent",
    "EvalPair",
    "Permutation",
    "BipartiteInfo",
    "as_grid",
    "grid_modulus",
    "components",
    "bipartite_split",
    "graph_components",
    "two_coloring",
    "parse_entry",
    "format_entry",
    "parse_matrix",
    "format_matrix",
    "parse_graph",
    "format_graph",
    "parse_poly",
    "format_poly",
    "read_matrix",
    "read_graph",
    "read_poly",
    "bipartisation",
    "fourier_grid",
    "fourier_matrix",
    "generalized_fourier",
    "kron",
    "kron_grid",
    "permuted",
    "scaled",
    "hadamard",
    "h4",
    "vertex_cover",
    "coloring",
    "diag",
    "random_permutation",
    "thicken",
    "edgeless",
    "complete",
    "cycle",
    "path",
    "complete_bipartite",
    "disjoint_union",
    "random_multigraph",
    "random_simple_graph",
    "graph_suite",
]
