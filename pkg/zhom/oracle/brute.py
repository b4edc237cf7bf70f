"""Exponential-time reference sums.

Assignments are enumerated depth-first in lexicographic order; each vertex multiplies in its own weight and the
weights of edges back to already-assigned vertices, so zero prefixes are pruned. With ``threads > 1`` the values of
the first vertex are split across a thread pool and partial sums are merged in value order.
"""

from __future__ import annotations

import itertools
from collections import Counter
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Generic, TypeVar

from ..core.entry import PureEntry
from ..core.graph import MultiGraph
from ..core.matrix import PureMatrix
from ..core.pair import EvalPair
from ..cyclotomic import CycNum
from ..gausssum.poly import QuadPoly
from ..utils.errors import SizeGuardExceeded
from ..utils.log import get_logger

logger = get_logger(__name__)

DEFAULT_SIZE_GUARD = 20_000_000

W = TypeVar("W")
PureWeight = tuple[Fraction, int]


def check_size(base: int, exponent: int, size_guard: int) -> None:
    work = base**exponent
    if work > size_guard:
        raise SizeGuardExceeded(work, size_guard)


class _Algebra(Generic[W]):
    one: W

    def mul(self, a: W, b: W) -> W:
        raise NotImplementedError

    def is_zero(self, a: W) -> bool:
        raise NotImplementedError

    def power(self, a: W, t: int) -> W:
        raise NotImplementedError


class _PureAlgebra(_Algebra[PureWeight]):
    """Weights ``(magnitude, exponent mod L)`` for a fixed root modulus L."""

    def __init__(self, modulus: int):
        self.modulus = modulus
        self.one = (Fraction(1), 0)

    def of(self, e: PureEntry) -> PureWeight:
        if e.is_zero():
            return (Fraction(0), 0)
        return (e.magnitude, e.exponent_at(self.modulus))

    def mul(self, a: PureWeight, b: PureWeight) -> PureWeight:
        return (a[0] * b[0], (a[1] + b[1]) % self.modulus)

    def is_zero(self, a: PureWeight) -> bool:
        return a[0] == 0

    def power(self, a: PureWeight, t: int) -> PureWeight:
        return (a[0] ** t, (a[1] * t) % self.modulus)

    def to_cycnum(self, a: PureWeight) -> CycNum:
        return CycNum.from_exponent_counts(self.modulus, {a[1]: a[0]})


class _CycAlgebra(_Algebra[CycNum]):
    def __init__(self) -> None:
        self.one = CycNum.one()

    def mul(self, a: CycNum, b: CycNum) -> CycNum:
        return a * b

    def is_zero(self, a: CycNum) -> bool:
        return a.is_zero()

    def power(self, a: CycNum, t: int) -> CycNum:
        return a**t


@dataclass
class _Enumeration(Generic[W]):
    algebra: _Algebra[W]
    G: MultiGraph
    m: int
    edge_value: Callable[[int, int], W]
    vertex_value: Callable[[int, int], W] | None = None
    """``(vertex, index) -> weight``; None when vertices carry no weight."""

    def __post_init__(self) -> None:
        n = self.G.vertex_count
        cache: dict[int, list[list[W]]] = {}

        def table(t: int) -> list[list[W]]:
            if t not in cache:
                cache[t] = [
                    [self.algebra.power(self.edge_value(a, b), t) for b in range(self.m)] for a in range(self.m)
                ]
            return cache[t]

        self.back: list[list[tuple[int, list[list[W]]]]] = [[] for _ in range(n)]
        for u, v, t in self.G.edges:
            self.back[max(u, v)].append((min(u, v), table(t)))

    def _walk(self, v: int, assignment: list[int], partial: W, leaf: Callable[[W], None]) -> None:
        if v == self.G.vertex_count:
            leaf(partial)
            return
        alg = self.algebra
        for i in range(self.m):
            w = partial
            if self.vertex_value is not None:
                w = alg.mul(w, self.vertex_value(v, i))
            assignment[v] = i
            for u, tbl in self.back[v]:
                if alg.is_zero(w):
                    break
                w = alg.mul(w, tbl[assignment[u]][i])
            if alg.is_zero(w):
                continue
            self._walk(v + 1, assignment, w, leaf)

    def leaves(self, first_values: Sequence[int] | None, leaf: Callable[[W], None]) -> None:
        """Visit all nonzero assignment weights whose first vertex takes one of ``first_values``."""
        n = self.G.vertex_count
        if n == 0:
            leaf(self.algebra.one)
            return
        alg = self.algebra
        assignment = [0] * n
        for i in first_values if first_values is not None else range(self.m):
            assignment[0] = i
            w = alg.one if self.vertex_value is None else self.vertex_value(0, i)
            for _, tbl in self.back[0]:
                w = alg.mul(w, tbl[i][i])
            if not alg.is_zero(w):
                self._walk(1, assignment, w, leaf)


def _split(values: Sequence[int], threads: int) -> list[list[int]]:
    threads = max(1, min(threads, len(values)))
    return [list(values[k::threads]) for k in range(threads)] if threads > 1 else [list(values)]


def _run_pure(enum: _Enumeration[PureWeight], first_values: Sequence[int], threads: int) -> Counter[PureWeight]:
    def work(values: list[int]) -> Counter[PureWeight]:
        counts: Counter[PureWeight] = Counter()

        def leaf(w: PureWeight) -> None:
            counts[w] += 1

        enum.leaves(values, leaf)
        return counts

    chunks = _split(first_values, threads)
    if len(chunks) == 1:
        return work(chunks[0])
    total: Counter[PureWeight] = Counter()
    with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
        for part in pool.map(work, chunks):
            total.update(part)
    return total


def _run_cyc(enum: _Enumeration[CycNum], first_values: Sequence[int], threads: int) -> CycNum:
    def work(values: list[int]) -> CycNum:
        acc = [CycNum.zero()]

        def leaf(w: CycNum) -> None:
            acc[0] = acc[0] + w

        enum.leaves(values, leaf)
        return acc[0]

    chunks = _split(first_values, threads)
    if len(chunks) == 1:
        return work(chunks[0])
    total = CycNum.zero()
    with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
        for part in pool.map(work, chunks):
            total = total + part
    return total


def _pure_counts(A: PureMatrix, G: MultiGraph, size_guard: int, threads: int) -> tuple[_PureAlgebra, Counter]:
    check_size(A.dim, G.vertex_count, size_guard)
    alg = _PureAlgebra(A.root_modulus())
    enum: _Enumeration[PureWeight] = _Enumeration(alg, G, A.dim, lambda a, b: alg.of(A[a, b]))
    return alg, _run_pure(enum, range(A.dim), threads)


def _as_rows(A: PureMatrix | Sequence[Sequence[CycNum]]) -> list[list[CycNum]]:
    if isinstance(A, PureMatrix):
        return A.to_cycnum_rows()
    return [list(row) for row in A]


def brute_eval_A(
    A: PureMatrix | Sequence[Sequence[CycNum]],
    G: MultiGraph,
    size_guard: int = DEFAULT_SIZE_GUARD,
    threads: int = 1,
) -> CycNum:
    """``Σ_ξ Π_{uv ∈ E} A_{ξ(u),ξ(v)}^{mult}`` over all ``m^{|V|}`` assignments."""
    if isinstance(A, PureMatrix):
        alg, counts = _pure_counts(A, G, size_guard, threads)
        by_exp: dict[int, Fraction] = {}
        for (mag, exp), c in counts.items():
            by_exp[exp] = by_exp.get(exp, Fraction(0)) + mag * c
        return CycNum.from_exponent_counts(alg.modulus, by_exp)
    rows = _as_rows(A)
    check_size(len(rows), G.vertex_count, size_guard)
    enum: _Enumeration[CycNum] = _Enumeration(_CycAlgebra(), G, len(rows), lambda a, b: rows[a][b])
    return _run_cyc(enum, range(len(rows)), threads)


def count_by_weight(
    A: PureMatrix,
    G: MultiGraph,
    size_guard: int = DEFAULT_SIZE_GUARD,
    threads: int = 1,
) -> Counter[CycNum]:
    """Number of assignments of every exact weight; zero weights included."""
    alg, counts = _pure_counts(A, G, size_guard, threads)
    out: Counter[CycNum] = Counter()
    for w, c in counts.items():
        out[alg.to_cycnum(w)] += c
    missing = A.dim**G.vertex_count - sum(counts.values())
    if missing:
        out[CycNum.zero(alg.modulus)] += missing
    return out


def _pair_enumeration(P: EvalPair, G: MultiGraph, size_guard: int) -> _Enumeration[CycNum]:
    check_size(P.dim, G.vertex_count, size_guard)
    degrees = G.degrees()
    return _Enumeration(
        _CycAlgebra(), G, P.dim, lambda a, b: P.C[a][b], lambda v, i: P.weight(degrees[v], i)
    )


def brute_eval_CD(P: EvalPair, G: MultiGraph, size_guard: int = DEFAULT_SIZE_GUARD, threads: int = 1) -> CycNum:
    """``Σ_ξ Π_E C^{mult} · Π_v D^{[deg(v) mod N]}_{ξ(v)}``."""
    return _run_cyc(_pair_enumeration(P, G, size_guard), range(P.dim), threads)


def _rooted(P: EvalPair, G: MultiGraph, u: int, side: range, size_guard: int, threads: int) -> CycNum:
    if P.row_count is None:
        raise ValueError("oriented sums need a pair whose C is a bipartisation")
    relabel = [u] + [v for v in range(G.vertex_count) if v != u]
    H = G.induced(relabel)
    return _run_cyc(_pair_enumeration(P, H, size_guard), side, threads)


def brute_Z_arrow(P: EvalPair, G: MultiGraph, u: int, size_guard: int = DEFAULT_SIZE_GUARD, threads: int = 1) -> CycNum:
    """The part of ``Z_{C,D}(G)`` with ``ξ(u)`` in the first index half."""
    return _rooted(P, G, u, range(P.row_count or 0), size_guard, threads)


def brute_Z_back(P: EvalPair, G: MultiGraph, u: int, size_guard: int = DEFAULT_SIZE_GUARD, threads: int = 1) -> CycNum:
    """The part of ``Z_{C,D}(G)`` with ``ξ(u)`` in the second index half."""
    return _rooted(P, G, u, range(P.row_count or 0, P.dim), size_guard, threads)


def brute_gauss(q: int, f: QuadPoly, size_guard: int = DEFAULT_SIZE_GUARD) -> CycNum:
    """``Σ_{x ∈ Z_q^n} ω_q^{f(x)}`` by enumeration."""
    if f.q != q:
        raise ValueError(f"polynomial has modulus {f.q}, expected {q}")
    check_size(q, f.n, size_guard)
    counts = Counter(f.evaluate(x) for x in itertools.product(range(q), repeat=f.n))
    return CycNum.from_exponent_counts(q, counts)
