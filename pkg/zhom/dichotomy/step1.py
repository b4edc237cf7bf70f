"""Magnitude stage: a connected component must have (block) rank one in absolute value."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from ..core.matrix import PureMatrix, bipartite_split
from ..utils.log import get_logger
from .certificate import Witness

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class Purified:
    """``A_{x,y} = scale · row_norms[x] · col_norms[y] · ω_N^{exponents[x][y]}`` over the component's sides.

    For a bipartite component ``rows``/``cols`` are the two colour classes and ``scale`` is 1. For a non-bipartite
    component both sides are the whole index range and the norms coincide.
    """

    bipartite: bool
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    row_norms: tuple[Fraction, ...]
    col_norms: tuple[Fraction, ...]
    scale: Fraction
    exponents: tuple[tuple[int, ...], ...]
    modulus: int


def find_nonzero_minor(M: Sequence[Sequence[Fraction]]) -> tuple[int, int, int, int] | None:
    """``(x, x', y, y')`` with ``M_{xy}M_{x'y'} ≠ M_{xy'}M_{x'y}``, or None when ``M`` has rank at most one.

    Rows are compared against the first nonzero row, so the reported minor always involves it.
    """
    ref = next((x for x, row in enumerate(M) if any(row)), None)
    if ref is None:
        return None
    y0 = next(y for y, v in enumerate(M[ref]) if v)
    for x, row in enumerate(M):
        if x == ref:
            continue
        for y, v in enumerate(row):
            if v * M[ref][y0] != row[y0] * M[ref][y]:
                a, b = sorted((ref, x))
                c, d = sorted((y0, y))
                return a, b, c, d
    return None


def step1_bulatov_grohe(A: PureMatrix, indices: Sequence[int]) -> Purified | Witness:
    """Check the magnitudes of a connected component of size at least two and factor them.

    ``indices`` are the component's positions in the input matrix; they only label the witness.
    """
    info = bipartite_split(A)
    mags = A.magnitudes()
    if info.is_bipartite:
        rows, cols = info.rows, info.cols
    else:
        rows = cols = tuple(range(A.dim))
    block = [[mags[x][y] for y in cols] for x in rows]
    minor = find_nonzero_minor(block)
    if minor is not None:
        x, x2, y, y2 = minor
        logger.debug(f"magnitude minor at rows {rows[x]},{rows[x2]} cols {cols[y]},{cols[y2]}")
        return Witness(
            stage="step1",
            condition="bulatov-grohe",
            details={
                "bipartite": info.is_bipartite,
                "rows": [indices[rows[x]], indices[rows[x2]]],
                "cols": [indices[cols[y]], indices[cols[y2]]],
            },
        )
    N = A.root_modulus()
    exponents = tuple(tuple(A[x, y].exponent_at(N) for y in cols) for x in rows)
    if info.is_bipartite:
        row_norms = tuple(block[x][0] for x in range(len(rows)))
        col_norms = tuple(block[0][y] / block[0][0] for y in range(len(cols)))
        scale = Fraction(1)
    else:
        scale = block[0][0]
        row_norms = col_norms = tuple(block[x][0] / scale for x in range(len(rows)))
    return Purified(info.is_bipartite, rows, cols, row_norms, col_norms, scale, exponents, N)


def recheck_minor(A: PureMatrix, details: dict) -> bool:
    (x, x2), (y, y2) = details["rows"], details["cols"]
    return A[x, y].magnitude * A[x2, y2].magnitude != A[x, y2].magnitude * A[x2, y].magnitude
