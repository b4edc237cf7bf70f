from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import networkx as nx

from ..cyclotomic import CycNum
from ..utils.errors import NotSymmetric
from .entry import PureEntry
from .permutation import Permutation

EntryGrid = tuple[tuple[PureEntry, ...], ...]
"""A rectangular block of pure entries (rows of equal length)."""


def as_grid(rows: Sequence[Sequence[PureEntry | int | Fraction]]) -> EntryGrid:
    grid = tuple(tuple(PureEntry.of(v) for v in row) for row in rows)
    if grid and any(len(row) != len(grid[0]) for row in grid):
        raise ValueError("rows of a block must have equal length")
    return grid


def grid_modulus(grid: EntryGrid) -> int:
    """lcm of the root orders of all nonzero entries."""
    out = 1
    for row in grid:
        for e in row:
            if not e.is_zero():
                out = lcm(out, e.root_order)
    return out


@dataclass(frozen=True, slots=True)
class PureMatrix:
    """Symmetric square matrix of pure entries."""

    entries: EntryGrid

    def __post_init__(self) -> None:
        m = len(self.entries)
        if any(len(row) != m for row in self.entries):
            raise ValueError("matrix must be square")
        for i in range(m):
            for j in range(i + 1, m):
                if self.entries[i][j] != self.entries[j][i]:
                    raise NotSymmetric(f"entry ({i},{j}) differs from ({j},{i})")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[PureEntry | int | Fraction]]) -> PureMatrix:
        return cls(as_grid(rows))

    @classmethod
    def from_cycnums(cls, rows: Sequence[Sequence[CycNum]]) -> PureMatrix:
        return cls(tuple(tuple(PureEntry.from_cycnum(z) for z in row) for row in rows))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> PureEntry:
        i, j = ij
        return self.entries[i][j]

    def root_modulus(self) -> int:
        return grid_modulus(self.entries)

    def magnitudes(self) -> list[list[Fraction]]:
        return [[e.magnitude for e in row] for row in self.entries]

    def to_cycnum_rows(self) -> list[list[CycNum]]:
        return [[e.to_cycnum() for e in row] for row in self.entries]

    def submatrix(self, indices: Sequence[int]) -> PureMatrix:
        return PureMatrix(tuple(tuple(self.entries[i][j] for j in indices) for i in indices))

    def permuted(self, perm: Permutation) -> PureMatrix:
        """``A_{Π,Π}``: new entry (i, j) is old entry (perm(i), perm(j))."""
        if len(perm) != self.dim:
            raise ValueError(f"permutation of size {len(perm)} for a {self.dim}x{self.dim} matrix")
        return self.submatrix(perm.image)

    def nonzero_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.dim))
        for i in range(self.dim):
            for j in range(i, self.dim):
                if not self.entries[i][j].is_zero():
                    graph.add_edge(i, j)
        return graph

    def is_nonnegative(self) -> bool:
        return all(e.is_zero() or e.root_order == 1 for row in self.entries for e in row)


@dataclass(frozen=True, slots=True)
class BipartiteInfo:
    is_bipartite: bool
    rows: tuple[int, ...] = ()
    """Original indices on the side of the least index, increasing."""
    cols: tuple[int, ...] = ()
    block: EntryGrid = ()
    """``B`` with ``A`` equal to the bipartisation of ``B`` after reordering ``rows + cols``."""

    @property
    def permutation(self) -> Permutation:
        return Permutation(self.rows + self.cols)


def components(A: PureMatrix) -> list[tuple[tuple[int, ...], PureMatrix]]:
    """Connected components of the nonzero-entry graph, ordered by least index."""
    parts = sorted(tuple(sorted(c)) for c in nx.connected_components(A.nonzero_graph()))
    return [(part, A.submatrix(part)) for part in parts]


def bipartite_split(A: PureMatrix) -> BipartiteInfo:
    graph = A.nonzero_graph()
    if A.dim == 0 or nx.number_of_selfloops(graph) or not nx.is_bipartite(graph):
        return BipartiteInfo(False)
    colors = nx.bipartite.color(graph)
    anchor = colors[0]
    rows = tuple(i for i in range(A.dim) if colors[i] == anchor)
    cols = tuple(i for i in range(A.dim) if colors[i] != anchor)
    block = tuple(tuple(A.entries[i][j] for j in cols) for i in rows)
    return BipartiteInfo(True, rows, cols, block)
