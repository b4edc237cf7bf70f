"""Constructors for the matrices and graphs used by the corpus and the property suites."""

from __future__ import annotations

import random
from collections.abc import Sequence
from fractions import Fraction
from math import gcd

from .entry import PureEntry
from .graph import MultiGraph
from .matrix import EntryGrid, PureMatrix, as_grid
from .permutation import Permutation

# ---------------------------------------------------------------------------------------------------- matrices


def bipartisation(F: Sequence[Sequence[PureEntry | int | Fraction]]) -> PureMatrix:
    """``[[0, F], [F^T, 0]]``."""
    grid = as_grid(F)
    s = len(grid)
    t = len(grid[0]) if s else 0
    zero = PureEntry(Fraction(0))
    rows = [[zero] * s + list(grid[i]) for i in range(s)]
    rows += [[grid[i][j] for i in range(s)] + [zero] * t for j in range(t)]
    return PureMatrix.from_rows(rows)


def fourier_grid(q: int, alpha: int = 1) -> EntryGrid:
    return tuple(tuple(PureEntry.root(q, alpha * x * y) for y in range(q)) for x in range(q))


def fourier_matrix(q: int, alpha: int = 1) -> PureMatrix:
    """``F_{q,α}`` with entries ``ω_q^{αxy}``; symmetric, so usable directly as a non-bipartite matrix."""
    return PureMatrix(fourier_grid(q, alpha))


def generalized_fourier(q: int, W: Sequence[Sequence[int]]) -> PureMatrix:
    """The q²×q² matrix ``ω_q^{x^T W y}`` over ``x, y ∈ Z_q²``."""
    (w11, w12), (w21, w22) = W
    if w12 != w21:
        raise ValueError("W must be symmetric")
    if gcd(w11 * w22 - w12 * w21, q) != 1:
        raise ValueError("det W must be invertible mod q")
    points = [(a, b) for a in range(q) for b in range(q)]
    return PureMatrix.from_rows(
        [
            [PureEntry.root(q, x[0] * (w11 * y[0] + w12 * y[1]) + x[1] * (w21 * y[0] + w22 * y[1])) for y in points]
            for x in points
        ]
    )


def kron(A: PureMatrix, B: PureMatrix) -> PureMatrix:
    return PureMatrix.from_rows(
        [[a * b for a in row_a for b in row_b] for row_a in A.entries for row_b in B.entries]
    )


def kron_grid(A: EntryGrid, B: EntryGrid) -> EntryGrid:
    return tuple(tuple(a * b for a in row_a for b in row_b) for row_a in A for row_b in B)


def permuted(A: PureMatrix, perm: Permutation) -> PureMatrix:
    return A.permuted(perm)


def scaled(A: PureMatrix, c: int | Fraction) -> PureMatrix:
    return PureMatrix.from_rows([[e.scaled(c) for e in row] for row in A.entries])


def hadamard() -> PureMatrix:
    return PureMatrix.from_rows([[1, 1], [1, -1]])


def h4() -> PureMatrix:
    return PureMatrix.from_rows([[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]])


def vertex_cover() -> PureMatrix:
    return PureMatrix.from_rows([[0, 1], [1, 1]])


def coloring(k: int) -> PureMatrix:
    """``J_k - I_k``: proper k-colourings."""
    return PureMatrix.from_rows([[0 if i == j else 1 for j in range(k)] for i in range(k)])


def diag(*values: PureEntry | int | Fraction) -> PureMatrix:
    n = len(values)
    return PureMatrix.from_rows([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])


def random_permutation(rng: random.Random, n: int) -> Permutation:
    image = list(range(n))
    rng.shuffle(image)
    return Permutation(tuple(image))


# ---------------------------------------------------------------------------------------------------- graphs


def thicken(G: MultiGraph, p: int) -> MultiGraph:
    """Every multiplicity multiplied by ``p``."""
    return G.thickened(p)


def edgeless(n: int) -> MultiGraph:
    return MultiGraph(n)


def complete(n: int) -> MultiGraph:
    return MultiGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> MultiGraph:
    if n == 1:
        return MultiGraph(1, ((0, 0, 1),))
    if n == 2:
        return MultiGraph(2, ((0, 1, 2),))
    return MultiGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> MultiGraph:
    return MultiGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> MultiGraph:
    return MultiGraph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def disjoint_union(G: MultiGraph, H: MultiGraph) -> MultiGraph:
    shift = G.vertex_count
    return MultiGraph(G.vertex_count + H.vertex_count, G.edges + tuple((u + shift, v + shift, t) for u, v, t in H.edges))


def random_multigraph(
    rng: random.Random,
    n: int,
    max_total_multiplicity: int,
    connected: bool = True,
    loops: bool = True,
) -> MultiGraph:
    """Random multigraph on ``n`` vertices; connected graphs start from a random spanning tree."""
    if n == 0:
        return MultiGraph(0)
    edges: list[tuple[int, int, int]] = []
    if connected:
        if max_total_multiplicity < n - 1:
            raise ValueError(f"{n} connected vertices need at least {n - 1} edges")
        order = list(range(n))
        rng.shuffle(order)
        for i in range(1, n):
            edges.append((order[rng.randrange(i)], order[i], 1))
    budget = rng.randint(len(edges), max_total_multiplicity) - len(edges)
    if n == 1 and not loops:
        budget = 0
    while budget > 0:
        u = rng.randrange(n)
        v = u if loops and rng.random() < 0.15 else rng.randrange(n)
        if u == v and not loops:
            continue
        t = rng.randint(1, min(3, budget))
        edges.append((u, v, t))
        budget -= t
    return MultiGraph(n, tuple(edges))


def random_simple_graph(rng: random.Random, n: int, density: float = 0.5) -> MultiGraph:
    return MultiGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density])


def graph_suite(
    seed: int = 2024,
    count: int = 100,
    max_vertices: int = 6,
    max_total_multiplicity: int = 12,
) -> list[MultiGraph]:
    """Deterministic suite of connected multigraphs, self-loops included."""
    rng = random.Random(seed)
    suite = [MultiGraph(1), MultiGraph(1, ((0, 0, 1),)), complete(2), cycle(3), cycle(4), path(4)]
    while len(suite) < count:
        n = rng.randint(1, max_vertices)
        suite.append(random_multigraph(rng, n, max(max_total_multiplicity, n - 1)))
    return suite[:count]
