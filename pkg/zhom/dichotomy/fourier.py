"""Group condition and Fourier decomposition of a normalised core ``X`` (exponents of ``ω_{N'}``).

A decomposition assigns every row class and every column class a point of ``Z_{q_1} × … × Z_{q_k}`` so that
``X_{ab} = Σ_F (N'/q_F)·x_F(a)^T·form_F·y_F(b)`` where each factor ``F`` covers one or two coordinates of a common
prime-power modulus ``q_F``.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass
from math import gcd

from sympy import factorint

from ..gausssum.poly import prime_power
from ..lattice import basis_decomposition, element_order, vadd, vscale, vzero
from ..utils.log import get_logger
from .certificate import FourierFactor

logger = get_logger(__name__)

Vector = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class FourierDecomposition:
    factors: tuple[FourierFactor, ...]
    moduli: tuple[int, ...]
    row_points: tuple[Vector, ...]
    col_points: tuple[Vector, ...]


def pairing(factors: Sequence[FourierFactor], x: Sequence[int], y: Sequence[int], N2: int) -> int:
    """``Σ_F (N'/q_F)·x_F^T·form_F·y_F`` modulo ``N'``."""
    total = 0
    for f in factors:
        step = N2 // f.q
        for i, ci in enumerate(f.coords):
            for j, cj in enumerate(f.coords):
                total += step * f.form[i][j] * x[ci] * y[cj]
    return total % N2


def closure_violation(vectors: Sequence[Sequence[int]], N2: int) -> tuple[int, int] | None:
    present = {tuple(v) for v in vectors}
    for a, u in enumerate(vectors):
        for b in range(a, len(vectors)):
            if tuple((s + t) % N2 for s, t in zip(u, vectors[b], strict=True)) not in present:
                return a, b
    return None


def check_group_condition(X: Sequence[Sequence[int]], N2: int, bipartite: bool) -> dict | None:
    """Rows (and, for a bipartite core, columns) of ``X`` must be closed under addition."""
    axes = [("rows", [list(r) for r in X])]
    if bipartite:
        axes.append(("cols", [list(c) for c in zip(*X, strict=True)]))
    for axis, vectors in axes:
        bad = closure_violation(vectors, N2)
        if bad is not None:
            return {"axis": axis, "vectors": vectors, "modulus": N2, "pair": list(bad)}
    return None


def recheck_group_condition(details: dict) -> bool:
    return closure_violation(details["vectors"], details["modulus"]) is not None


def _verify(X: Sequence[Sequence[int]], N2: int, decomposition: FourierDecomposition) -> bool:
    return all(
        X[a][b] % N2 == pairing(decomposition.factors, x, y, N2)
        for a, x in enumerate(decomposition.row_points)
        for b, y in enumerate(decomposition.col_points)
    )


def _failure(X: Sequence[Sequence[int]], N2: int, bipartite: bool, reason: str) -> dict:
    logger.debug(f"Fourier decomposition failed: {reason}")
    return {"X": [list(r) for r in X], "modulus": N2, "bipartite": bipartite, "reason": reason}


def fourier_bipartite(X: Sequence[Sequence[int]], N2: int) -> FourierDecomposition | dict:
    """Cyclic factors of the row group; column coordinates are read off the generators."""
    rows = [tuple(r) for r in X]
    h = len(rows)
    moduli = (N2,) * len(rows[0])
    basis = basis_decomposition(set(rows), moduli)
    if basis.size != len(set(rows)) or len(set(rows)) != h:
        return _failure(X, N2, True, "row group size")
    coords = basis.coordinates()
    row_points = tuple(coords[r] for r in rows)
    col_points = tuple(
        tuple(g[b] * q // N2 for g, q in zip(basis.generators, basis.orders, strict=True)) for b in range(len(moduli))
    )
    if len(set(col_points)) != len(col_points) or len(col_points) != h:
        return _failure(X, N2, True, "column bijection")
    factors = tuple(
        FourierFactor(prime=prime_power(q)[0], q=q, coords=[i], form=[[1]]) for i, q in enumerate(basis.orders)
    )
    out = FourierDecomposition(factors, basis.orders, row_points, col_points)
    if not _verify(X, N2, out):
        return _failure(X, N2, True, "reassembly")
    return out


def fourier_symmetric(X: Sequence[Sequence[int]], N2: int) -> FourierDecomposition | dict:
    """Orthogonal splitting of the row group under ``β(u, v) = u[class(v)]``.

    Per prime, a generator whose self-pairing has maximal order gives a factor ``F_{q,α}``; for ``p = 2`` a pair with
    a maximal-order cross pairing gives ``F_{q,W}``. The remainder is the orthogonal complement.
    """
    rows = [tuple(r) for r in X]
    h = len(rows)
    class_of = {v: a for a, v in enumerate(rows)}
    if len(class_of) != h:
        return _failure(X, N2, False, "repeated rows")
    moduli = (N2,) * h

    def beta(u: Vector, v: Vector) -> int:
        return u[class_of[v]]

    def value_order(value: int) -> int:
        return N2 // gcd(value, N2)

    factors: list[FourierFactor] = []
    gens: list[Vector] = []
    for p, e in sorted(factorint(h).items()):
        p = int(p)
        cofactor = h // p ** int(e)
        P = {vscale(cofactor, x, moduli) for x in rows}
        while len(P) > 1:
            ordered = sorted(P)
            q = max(element_order(g, moduli) for g in ordered)
            single = next((g for g in ordered if value_order(beta(g, g)) == q), None)
            if single is not None:
                block = [single]
            elif p == 2:
                pair = next(
                    (
                        (g, k)
                        for g in ordered
                        if element_order(g, moduli) == q
                        for k in ordered
                        if value_order(beta(g, k)) == q
                    ),
                    None,
                )
                if pair is None:
                    return _failure(X, N2, False, f"degenerate 2-part of order {q}")
                block = list(pair)
            else:
                return _failure(X, N2, False, f"no generator with self-pairing of order {q}")
            if any(beta(u, v) * q % N2 for u in block for v in block):
                return _failure(X, N2, False, "pairing is not bilinear")
            form = [[beta(u, v) * q // N2 % q for v in block] for u in block]
            complement = {z for z in P if all(beta(u, z) == 0 for u in block)}
            if len(complement) * q ** len(block) != len(P):
                return _failure(X, N2, False, f"complement of a factor of order {q}")
            first = len(gens)
            factors.append(FourierFactor(prime=p, q=q, coords=list(range(first, first + len(block))), form=form))
            gens.extend(block)
            P = complement
    orders = tuple(f.q for f in factors for _ in f.coords)
    points: dict[Vector, Vector] = {}
    for c in itertools.product(*(range(q) for q in orders)):
        v = vzero(moduli)
        for k, g in zip(c, gens, strict=True):
            v = vadd(v, vscale(k, g, moduli), moduli)
        points[v] = tuple(c)
    if len(points) != h or any(r not in points for r in rows):
        return _failure(X, N2, False, "generators do not span the rows")
    row_points = tuple(points[r] for r in rows)
    out = FourierDecomposition(tuple(factors), orders, row_points, row_points)
    if not _verify(X, N2, out):
        return _failure(X, N2, False, "reassembly")
    return out


def fourier_decompose(X: Sequence[Sequence[int]], N2: int, bipartite: bool) -> FourierDecomposition | dict:
    if bipartite:
        return fourier_bipartite(X, N2)
    return fourier_symmetric(X, N2)


def recheck_fourier(details: dict) -> bool:
    return isinstance(fourier_decompose(details["X"], details["modulus"], details["bipartite"]), dict)
