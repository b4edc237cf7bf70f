"""Quadratic polynomials over ``Z_{π̂}`` that encode the normalised weights and the core along uniform maps."""

from __future__ import annotations

from collections.abc import Sequence

from ..dichotomy.certificate import FourierFactor, PrimeSupport
from ..gausssum.poly import AffineForm, PolyBuilder, QuadPoly
from ..lattice import UniformMap
from ..utils.errors import InternalInconsistency


def character(factors: Sequence[FourierFactor], b: Sequence[int], z: Sequence[int], pi_hat: int) -> int:
    """Exponent of ``ω_{π̂}`` for ``Σ_F (π̂/q_F)·b^T·form_F·z``, unreduced."""
    total = 0
    for f in factors:
        step = pi_hat // f.q
        for i, ci in enumerate(f.coords):
            for j, cj in enumerate(f.coords):
                total += step * f.form[i][j] * b[ci] * z[cj]
    return total


def build_vertex_poly(part: PrimeSupport, umap: UniformMap, factors: Sequence[FourierFactor], N2: int) -> QuadPoly:
    """``f`` with ``Y'(λ(x)) = ω_{π̂}^{f(x)}`` on the block and ``f(0) = 0``.

    The difference data gives ``f(x + e_j) − f(x) = c_{j0} + Σ_m c_{jm}·x_m``; the quadratic part is recovered from the
    symmetric ``c`` with halved diagonal.
    """
    pi_hat = umap.pi_hat
    s = umap.source_dim
    builder = PolyBuilder(pi_hat, s)
    if not part.generators:
        return builder.build()
    if len(part.steps) != s:
        raise InternalInconsistency(f"{len(part.steps)} difference steps for {s} generators")
    c = [[character(factors, step.shift, umap.matrix[m], pi_hat) for m in range(s)] for step in part.steps]
    linear = []
    for step in part.steps:
        if step.alpha * pi_hat % N2:
            raise InternalInconsistency(f"ω_{N2}^{step.alpha} is not a power of ω_{pi_hat}")
        linear.append(step.alpha * pi_hat // N2 + character(factors, step.shift, umap.offset, pi_hat))
    for j in range(s):
        for m in range(j + 1, s):
            if (c[j][m] - c[m][j]) % pi_hat:
                raise InternalInconsistency(f"mixed differences of generators {j} and {m} disagree")
            builder.add_quad(j, m, c[j][m])
        diag = c[j][j] % pi_hat
        if pi_hat % 2:
            half = diag * pow(2, -1, pi_hat) % pi_hat
        elif diag % 2:
            raise InternalInconsistency(f"odd second difference {diag} along generator {j} at π̂ = {pi_hat}")
        else:
            half = diag // 2
        builder.add_quad(j, j, half)
        builder.add_lin(j, linear[j] - half)
    return builder.build()


def add_edge_terms(
    builder: PolyBuilder,
    left: Sequence[AffineForm],
    right: Sequence[AffineForm],
    factors: Sequence[FourierFactor],
    multiplicity: int = 1,
) -> None:
    """Add ``t·Σ_F (π̂/q_F)·λ(x)^T·form_F·δ(y)`` with ``λ``, ``δ`` given coordinate-wise as affine forms."""
    for f in factors:
        step = builder.q // f.q
        for i, ci in enumerate(f.coords):
            for j, cj in enumerate(f.coords):
                if f.form[i][j]:
                    builder.add_product(left[ci], right[cj], multiplicity * step * f.form[i][j])


def build_edge_poly(
    left: UniformMap, right: UniformMap, factors: Sequence[FourierFactor], multiplicity: int = 1
) -> QuadPoly:
    """The edge polynomial in the joined variables ``(x, y)``, ``x`` first."""
    if left.pi_hat != right.pi_hat:
        raise ValueError(f"uniform maps over Z_{left.pi_hat} and Z_{right.pi_hat}")
    s = left.source_dim
    builder = PolyBuilder(left.pi_hat, s + right.source_dim)
    add_edge_terms(builder, left.forms(0), right.forms(s), factors, multiplicity)
    return builder.build()
