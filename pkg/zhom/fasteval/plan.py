from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from math import prod

from ..core.graph import MultiGraph
from ..dichotomy.certificate import ComponentCertificate, FourierFactor, PrimeSupport, SideData, SupportData
from ..dichotomy.step3 import local_factors
from ..lattice import UniformMap
from ..utils.errors import InvalidCertificate


@dataclass(frozen=True, slots=True)
class VertexSlot:
    """Where one graph vertex lands: a side of the matrix component and a degree class."""

    side: str
    degree: int
    r: int
    """``degree mod N'``"""
    support: SupportData | None


@dataclass(frozen=True, slots=True)
class PrimeBlock:
    """Per-prime evaluation data of one vertex: its uniform map and the difference data it is keyed to."""

    part: PrimeSupport
    umap: UniformMap
    factors: tuple[FourierFactor, ...]


@dataclass(frozen=True, slots=True)
class EvalPlan:
    """One orientation of one connected graph on one matrix component."""

    component: ComponentCertificate
    graph: MultiGraph
    slots: tuple[VertexSlot, ...]

    @classmethod
    def build(cls, component: ComponentCertificate, graph: MultiGraph, sides: Sequence[str]) -> EvalPlan:
        """``sides[v]`` is ``rows`` or ``cols``; a non-bipartite component only has rows."""
        N2 = component.modulus2
        slots = []
        for v, d in enumerate(graph.degrees()):
            data = cls._side(component, sides[v])
            slots.append(VertexSlot(sides[v], d, d % N2, data.supports[d % N2]))
        return cls(component, graph, tuple(slots))

    @staticmethod
    def _side(component: ComponentCertificate, name: str) -> SideData:
        data = component.rows if name == "rows" else component.cols
        if data is None:
            raise InvalidCertificate(f"component {component.indices} has no {name} data")
        return data

    def side(self, name: str) -> SideData:
        return self._side(self.component, name)

    @property
    def has_empty_support(self) -> bool:
        return any(slot.support is None for slot in self.slots)

    def degree_classes(self) -> dict[tuple[str, int], list[int]]:
        """Vertices grouped by side and degree class."""
        out: dict[tuple[str, int], list[int]] = {}
        for v, slot in enumerate(self.slots):
            out.setdefault((slot.side, slot.r), []).append(v)
        return dict(sorted(out.items()))

    def prime_blocks(self, prime: int, pi_hat: int) -> list[PrimeBlock]:
        """Uniform maps onto every vertex's block support for ``prime``."""
        out = []
        for slot in self.slots:
            assert slot.support is not None
            part = next((p for p in slot.support.primes if p.prime == prime), None)
            if part is None:
                raise InvalidCertificate(f"support without a block for p={prime}")
            umap = UniformMap.from_generators(
                tuple(part.moduli),
                pi_hat,
                [tuple(g) for g in part.generators],
                tuple(part.pivot),
                prod(part.orders),
            )
            out.append(PrimeBlock(part, umap, tuple(local_factors(self.component.factors, part.coords))))
        return out
