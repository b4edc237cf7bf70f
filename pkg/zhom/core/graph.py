from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass

import networkx as nx

Edge = tuple[int, int, int]


@dataclass(frozen=True, slots=True)
class MultiGraph:
    """Undirected multigraph. ``edges`` holds ``(u, v, multiplicity)`` with ``u <= v``, merged and sorted.

    A self-loop of multiplicity t adds 2t to the degree of its vertex.
    """

    vertex_count: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.vertex_count}")
        merged: Counter[tuple[int, int]] = Counter()
        for u, v, t in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range for {self.vertex_count} vertices")
            if t < 1:
                raise ValueError(f"edge ({u},{v}) has non-positive multiplicity {t}")
            merged[(min(u, v), max(u, v))] += t
        object.__setattr__(self, "edges", tuple((u, v, t) for (u, v), t in sorted(merged.items())))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int] | Edge]) -> MultiGraph:
        out: list[Edge] = []
        for e in edges:
            out.append((e[0], e[1], e[2] if len(e) == 3 else 1))  # type: ignore[misc]
        return cls(vertex_count, tuple(out))

    def degree(self, v: int) -> int:
        return sum(t * (2 if u == w else 1) for u, w, t in self.edges if v in (u, w))

    def degrees(self) -> list[int]:
        out = [0] * self.vertex_count
        for u, v, t in self.edges:
            out[u] += t
            out[v] += t
        return out

    @property
    def total_multiplicity(self) -> int:
        return sum(t for _, _, t in self.edges)

    def has_loops(self) -> bool:
        return any(u == v for u, v, _ in self.edges)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from((u, v) for u, v, _ in self.edges)
        return graph

    def thickened(self, p: int) -> MultiGraph:
        return MultiGraph(self.vertex_count, tuple((u, v, t * p) for u, v, t in self.edges))

    def induced(self, vertices: Iterable[int]) -> MultiGraph:
        """Subgraph on ``vertices`` relabelled to ``0..k-1`` in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = tuple((index[u], index[v], t) for u, v, t in self.edges if u in index and v in index)
        return MultiGraph(len(index), edges)


@dataclass(frozen=True, slots=True)
class GraphComponent:
    vertices: tuple[int, ...]
    """Original vertex ids, increasing; local vertex i is ``vertices[i]``."""
    graph: MultiGraph


def graph_components(G: MultiGraph) -> list[GraphComponent]:
    parts = sorted(tuple(sorted(c)) for c in nx.connected_components(G.to_networkx()))
    return [GraphComponent(part, G.induced(part)) for part in parts]


def two_coloring(G: MultiGraph) -> list[int] | None:
    """Side of every vertex of a connected graph, vertex 0 on side 0; None if not bipartite."""
    if G.vertex_count == 0:
        return []
    graph = G.to_networkx()
    if nx.number_of_selfloops(graph) or not nx.is_bipartite(graph):
        return None
    colors = nx.bipartite.color(graph)
    return [0 if colors[v] == colors[0] else 1 for v in range(G.vertex_count)]
