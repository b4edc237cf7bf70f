from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ..gausssum.poly import AffineForm
from ..utils.errors import InternalInconsistency
from .groups import Coset, Moduli, Vector, vzero


@dataclass(frozen=True, slots=True)
class UniformMap:
    """``τ(x) = offset + Σ_j x_j·matrix[j]`` from ``Z_{π̂}^s`` onto a coset.

    Every point of the image has exactly ``multiplicity = π̂^s / |image|`` preimages.
    """

    moduli: Moduli
    pi_hat: int
    matrix: tuple[Vector, ...]
    offset: Vector
    multiplicity: int

    @classmethod
    def from_generators(
        cls, moduli: Moduli, pi_hat: int, generators: Sequence[Vector], offset: Vector, size: int
    ) -> UniformMap:
        if any(pi_hat % m for m in moduli):
            raise ValueError(f"π̂ = {pi_hat} is not a multiple of every modulus in {moduli}")
        rows = tuple(generators) or (vzero(moduli),)
        total = pi_hat ** len(rows)
        if total % size:
            raise InternalInconsistency(f"{total} source points cannot cover {size} points uniformly")
        return cls(moduli, pi_hat, rows, offset, total // size)

    @property
    def source_dim(self) -> int:
        return len(self.matrix)

    def __call__(self, x: Sequence[int]) -> Vector:
        out = list(self.offset)
        for c, row in zip(x, self.matrix, strict=True):
            for i, a in enumerate(row):
                out[i] += c * a
        return tuple(v % m for v, m in zip(out, self.moduli, strict=True))

    def forms(self, first_var: int) -> list[AffineForm]:
        """Coordinate ``i`` of τ as an integer affine form in variables ``first_var …``, before reduction."""
        return [
            AffineForm({first_var + j: row[i] for j, row in enumerate(self.matrix) if row[i]}, self.offset[i])
            for i in range(len(self.moduli))
        ]


def uniform_map(phi: Coset, pi_hat: int) -> UniformMap:
    """Uniform map onto ``phi`` built on the cyclic generators of its linear part, based at its representative."""
    return UniformMap.from_generators(phi.moduli, pi_hat, phi.generators, phi.representative, phi.size)
