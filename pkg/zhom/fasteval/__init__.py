from .evaluator import (
    assemble_and_sum,
    component_value,
    fast_eval,
    normalization_scalar,
    orientation_value,
    rank1_closed_form,
)
from .plan import EvalPlan, PrimeBlock, VertexSlot
from .polys import add_edge_terms, build_edge_poly, build_vertex_poly, character

__all__ = [
    "EvalPlan",
    "VertexSlot",
    "PrimeBlock",
    "fast_eval",
    "component_value",
    "orientation_value",
    "rank1_closed_form",
    "normalization_scalar",
    "assemble_and_sum",
    "build_vertex_poly",
    "build_edge_poly",
    "add_edge_terms",
    "character",
]
