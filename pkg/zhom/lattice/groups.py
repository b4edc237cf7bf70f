"""Finite abelian groups ``Z_{π_1} × … × Z_{π_h}`` given by explicit element tuples, and their cosets."""

from __future__ import annotations

import itertools
from collections.abc import Collection, Iterable, Sequence
from dataclasses import dataclass, field
from math import gcd, lcm, prod

from sympy import factorint

from ..gausssum.poly import prime_power
from ..utils.errors import InternalInconsistency

Vector = tuple[int, ...]
Moduli = tuple[int, ...]


def vzero(moduli: Moduli) -> Vector:
    return tuple(0 for _ in moduli)


def vadd(a: Vector, b: Vector, moduli: Moduli) -> Vector:
    return tuple((x + y) % m for x, y, m in zip(a, b, moduli, strict=True))


def vsub(a: Vector, b: Vector, moduli: Moduli) -> Vector:
    return tuple((x - y) % m for x, y, m in zip(a, b, moduli, strict=True))


def vscale(c: int, a: Vector, moduli: Moduli) -> Vector:
    return tuple((c * x) % m for x, m in zip(a, moduli, strict=True))


def element_order(x: Vector, moduli: Moduli) -> int:
    return lcm(1, *(m // gcd(v, m) for v, m in zip(x, moduli, strict=True)))


def span(generators: Iterable[Vector], moduli: Moduli) -> frozenset[Vector]:
    """The subgroup generated by ``generators``."""
    elements = {vzero(moduli)}
    for g in generators:
        frontier = set(elements)
        while frontier:
            step = {vadd(x, g, moduli) for x in frontier} - elements
            elements |= step
            frontier = step
    return frozenset(elements)


@dataclass(frozen=True, slots=True)
class GroupBasis:
    """Independent generators with prime-power orders; every element is ``Σ c_i·g_i`` for unique ``c_i ∈ Z_{q_i}``.

    Generators are grouped by prime (ascending) and, within a prime, listed with non-increasing orders.
    """

    moduli: Moduli
    generators: tuple[Vector, ...]
    orders: tuple[int, ...]

    def combine(self, coords: Sequence[int]) -> Vector:
        out = vzero(self.moduli)
        for c, g in zip(coords, self.generators, strict=True):
            out = vadd(out, vscale(c, g, self.moduli), self.moduli)
        return out

    def coordinates(self) -> dict[Vector, tuple[int, ...]]:
        """Every element of the generated group mapped to its coordinates."""
        return {self.combine(c): tuple(c) for c in itertools.product(*(range(q) for q in self.orders))}

    @property
    def size(self) -> int:
        return prod(self.orders)


def _quotient_order(x: Vector, p: int, H: Collection[Vector], moduli: Moduli) -> int:
    f = 1
    while vscale(f, x, moduli) not in H:
        f *= p
    return f


def basis_decomposition(elements: Collection[Vector], moduli: Moduli) -> GroupBasis:
    """Split a subgroup (given by all its elements) into cyclic factors of prime-power order.

    Per prime, repeatedly take an element of maximal order modulo the part found so far (ties broken by the least
    tuple), then subtract the multiple of earlier generators that makes it independent.
    """
    n = len(elements)
    generators: list[Vector] = []
    orders: list[int] = []
    for p, v in sorted(factorint(n).items()):
        p, v = int(p), int(v)
        cofactor = n // p**v
        sylow = sorted({vscale(cofactor, x, moduli) for x in elements})
        coords: dict[Vector, tuple[int, ...]] = {vzero(moduli): ()}
        local: list[Vector] = []
        while len(coords) < len(sylow):
            best, best_order = sylow[0], 0
            for x in sylow:
                f = _quotient_order(x, p, coords, moduli)
                if f > best_order:
                    best, best_order = x, f
            f = best_order
            ks = coords[vscale(f, best, moduli)]
            if any(k % f for k in ks):
                raise InternalInconsistency(f"greedy basis step failed at order {f}")
            g = best
            for k, h in zip(ks, local, strict=True):
                g = vsub(g, vscale(k // f, h, moduli), moduli)
            local.append(g)
            orders.append(f)
            coords = {vadd(x, vscale(c, g, moduli), moduli): cs + (c,) for x, cs in coords.items() for c in range(f)}
        generators.extend(local)
    return GroupBasis(moduli, tuple(generators), tuple(orders))


@dataclass(frozen=True)
class Coset:
    """``representative + ⟨generators⟩`` inside ``Z_{moduli[0]} × …``."""

    moduli: Moduli
    representative: Vector
    generators: tuple[Vector, ...]
    orders: tuple[int, ...]
    linear: frozenset[Vector] = field(init=False, repr=False, compare=False)
    elements: frozenset[Vector] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        lin = span(self.generators, self.moduli)
        object.__setattr__(self, "linear", lin)
        object.__setattr__(self, "elements", frozenset(vadd(self.representative, x, self.moduli) for x in lin))

    @classmethod
    def from_linear(cls, moduli: Moduli, representative: Vector, linear: Collection[Vector]) -> Coset:
        basis = basis_decomposition(linear, moduli)
        return cls(moduli, representative, basis.generators, basis.orders)

    @property
    def size(self) -> int:
        return len(self.elements)

    def contains(self, x: Vector) -> bool:
        return x in self.elements

    def rebased(self, point: Vector) -> Coset:
        if point not in self.elements:
            raise ValueError(f"{point} is not in the coset")
        return Coset(self.moduli, point, self.generators, self.orders)

    def sorted_elements(self) -> list[Vector]:
        return sorted(self.elements)


@dataclass(frozen=True, slots=True)
class NotACoset:
    points: tuple[Vector, ...]
    generated_size: int
    """Size of ``x_0 + ⟨S - x_0⟩``, which strictly exceeds ``len(points)``."""


def coset_detect(S: Collection[Vector], moduli: Moduli) -> Coset | NotACoset:
    if not S:
        raise ValueError("coset detection needs a nonempty set")
    points = sorted(set(S))
    x0 = points[0]
    linear = span((vsub(x, x0, moduli) for x in points[1:]), moduli)
    if len(linear) != len(points):
        return NotACoset(tuple(points), len(linear))
    return Coset.from_linear(moduli, x0, linear)


@dataclass(frozen=True, slots=True)
class PrimePart:
    prime: int
    coords: tuple[int, ...]
    """Ambient coordinates whose modulus is a power of ``prime``."""
    coset: Coset


def prime_blocks(moduli: Moduli) -> dict[int, tuple[int, ...]]:
    blocks: dict[int, list[int]] = {}
    for i, m in enumerate(moduli):
        blocks.setdefault(prime_power(m)[0], []).append(i)
    return {p: tuple(blocks[p]) for p in sorted(blocks)}


def project(x: Vector, coords: Sequence[int]) -> Vector:
    return tuple(x[i] for i in coords)


def coset_prime_split(phi: Coset) -> list[PrimePart]:
    """Project a coset onto its prime blocks; the coset is the product of the projections."""
    parts = []
    for p, coords in prime_blocks(phi.moduli).items():
        sub_moduli = tuple(phi.moduli[i] for i in coords)
        linear = {project(x, coords) for x in phi.linear}
        parts.append(PrimePart(p, coords, Coset.from_linear(sub_moduli, project(phi.representative, coords), linear)))
    if prod(part.coset.size for part in parts) != phi.size:
        raise InternalInconsistency(f"prime blocks of a coset of size {phi.size} do not multiply back")
    return parts


def reassemble(parts: Sequence[PrimePart], moduli: Moduli) -> set[Vector]:
    out = set()
    for choice in itertools.product(*(part.coset.sorted_elements() for part in parts)):
        x = [0] * len(moduli)
        for part, local in zip(parts, choice, strict=True):
            for i, v in zip(part.coords, local, strict=True):
                x[i] = v
        out.add(tuple(x))
    return out
