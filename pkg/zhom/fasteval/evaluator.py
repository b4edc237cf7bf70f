"""Polynomial-time evaluation of ``Z_A(G)`` from a tractability certificate."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction

from ..core.entry import parse_entry
from ..core.graph import MultiGraph, graph_components, two_coloring
from ..core.matrix import PureMatrix
from ..cyclotomic import CycNum, make_root
from ..dichotomy.certificate import Certificate, ComponentCertificate, parse_cyc, parse_frac
from ..dichotomy.pipeline import decide
from ..dichotomy.validate import validate_certificate
from ..gausssum.poly import PolyBuilder
from ..gausssum.solver import eval_gauss_sum
from ..utils.errors import InvalidCertificate
from ..utils.log import get_logger
from .plan import EvalPlan
from .polys import add_edge_terms, build_vertex_poly

logger = get_logger(__name__)


def rank1_closed_form(weights: Sequence[Fraction], K: Sequence[Sequence[CycNum]], degrees: Iterable[int]) -> CycNum:
    """``Π_u Σ_i weights_i^{d_u}·K^{[d_u mod N]}_i`` with ``N = len(K)``."""
    N = len(K)
    out = CycNum.one()
    for d in degrees:
        out = out * sum((K[d % N][i] * (w**d) for i, w in enumerate(weights)), CycNum.zero())
        if out.is_zero():
            break
    return out


def normalization_scalar(plan: EvalPlan) -> CycNum:
    """``ω_N^{−H_00·|E|}`` times, per vertex, the pivot weight ``ω_N^{h·d}`` that ``Y'`` was divided by."""
    component = plan.component
    H = component.core
    exponent = -H[0][0] * plan.graph.total_multiplicity
    for slot in plan.slots:
        pivot = plan.side(slot.side).pivots[slot.r]
        assert pivot is not None
        h0 = H[pivot][0] if slot.side == "rows" else H[0][pivot]
        exponent += h0 * slot.degree
    return make_root(component.modulus, exponent)


def assemble_and_sum(plan: EvalPlan) -> CycNum:
    """``Σ Π_u Y'_{ξ(u)} Π_{uv} X_{ξ(u)ξ(v)}^t`` as a product over primes of one Gauss sum each."""
    if plan.has_empty_support:
        return CycNum.zero()
    component = plan.component
    total = CycNum.one()
    for m in component.moduli:
        blocks = plan.prime_blocks(m.prime, m.pi_hat)
        offsets = []
        n = 0
        for block in blocks:
            offsets.append(n)
            n += block.umap.source_dim
        builder = PolyBuilder(m.pi_hat, n)
        divisor = 1
        for block, offset in zip(blocks, offsets, strict=True):
            builder.add_poly(build_vertex_poly(block.part, block.umap, block.factors, component.modulus2), offset)
            divisor *= block.umap.multiplicity
        forms = [block.umap.forms(offset) for block, offset in zip(blocks, offsets, strict=True)]
        for u, v, t in plan.graph.edges:
            add_edge_terms(builder, forms[u], forms[v], blocks[u].factors, t)
        f = builder.build()
        logger.debug(f"Gauss sum over Z_{m.pi_hat} in {n} variables with {len(f.quad)} quadratic terms")
        total = total * (eval_gauss_sum(f) / divisor)
        if total.is_zero():
            break
    return total


def orientation_value(plan: EvalPlan) -> CycNum:
    if plan.has_empty_support:
        return CycNum.zero()
    rank1 = CycNum.one()
    for name in sorted({slot.side for slot in plan.slots}):
        side = plan.side(name)
        rank1 = rank1 * rank1_closed_form(
            [parse_frac(t) for t in side.norm_groups],
            [[parse_cyc(t) for t in row] for row in side.K],
            [slot.degree for slot in plan.slots if slot.side == name],
        )
    if rank1.is_zero():
        return rank1
    return rank1 * normalization_scalar(plan) * assemble_and_sum(plan)


def component_value(component: ComponentCertificate, graph: MultiGraph) -> CycNum:
    """``Z`` of one matrix component on a connected graph."""
    if component.kind == "single":
        assert component.entry is not None
        return (parse_entry(component.entry) ** graph.total_multiplicity).to_cycnum()
    if component.kind == "non-bipartite":
        plan = EvalPlan.build(component, graph, ["rows"] * graph.vertex_count)
        scale = parse_frac(component.scale) ** graph.total_multiplicity
        return orientation_value(plan) * scale
    coloring = two_coloring(graph)
    if coloring is None:
        return CycNum.zero()
    total = CycNum.zero()
    for first in ("rows", "cols"):
        second = "cols" if first == "rows" else "rows"
        sides = [first if c == 0 else second for c in coloring]
        total = total + orientation_value(EvalPlan.build(component, graph, sides))
    return total


def fast_eval(A: PureMatrix, G: MultiGraph, cert: Certificate | None = None) -> CycNum:
    """Exact ``Z_A(G)``.

    Without a certificate the matrix is decided first; a supplied certificate must validate against ``A``.
    """
    if cert is None:
        verdict = decide(A)
        if not verdict.tractable:
            raise InvalidCertificate(f"no certificate exists: {verdict.label}")
        assert verdict.certificate is not None
        cert = verdict.certificate
    elif not validate_certificate(A, cert):
        raise InvalidCertificate("certificate does not validate against the matrix")
    total = CycNum.one()
    for part in graph_components(G):
        value = CycNum.zero()
        for component in cert.components:
            value = value + component_value(component, part.graph)
        total = total * value
        if total.is_zero():
            break
    return total
