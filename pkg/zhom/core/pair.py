from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from math import lcm

from ..cyclotomic import CycNum
from .matrix import PureMatrix

CycRows = tuple[tuple[CycNum, ...], ...]


def _kron(a: CycRows, b: CycRows) -> CycRows:
    return tuple(
        tuple(x * y for x in row_a for y in row_b) for row_a in a for row_b in b
    )


def _kron_diag(a: Sequence[CycNum], b: Sequence[CycNum]) -> tuple[CycNum, ...]:
    return tuple(x * y for x in a for y in b)


@dataclass(frozen=True, slots=True)
class EvalPair:
    """A pair ``(C, D)``: symmetric ``C`` and ``modulus`` diagonal matrices ``D^{[r]}`` stored as diagonals.

    ``row_count`` is set when ``C`` is a bipartisation whose first ``row_count`` indices form one side.
    """

    C: CycRows
    D: tuple[tuple[CycNum, ...], ...]
    modulus: int
    row_count: int | None = None

    def __post_init__(self) -> None:
        n = len(self.C)
        if any(len(row) != n for row in self.C):
            raise ValueError("C must be square")
        if len(self.D) != self.modulus or self.modulus < 1:
            raise ValueError(f"expected {self.modulus} diagonal matrices, got {len(self.D)}")
        if any(len(d) != n for d in self.D):
            raise ValueError("every D^[r] must have the dimension of C")
        if self.row_count is not None and not 0 <= self.row_count <= n:
            raise ValueError(f"row_count {self.row_count} out of range")

    @property
    def dim(self) -> int:
        return len(self.C)

    def weight(self, r: int, i: int) -> CycNum:
        return self.D[r % self.modulus][i]

    @classmethod
    def from_matrix(cls, A: PureMatrix) -> EvalPair:
        C = tuple(tuple(row) for row in A.to_cycnum_rows())
        return cls(C, (tuple(CycNum.one() for _ in range(A.dim)),), 1)

    @classmethod
    def bipartisation_of(
        cls,
        F: Sequence[Sequence[CycNum]],
        D_rows: Sequence[Sequence[CycNum]],
        D_cols: Sequence[Sequence[CycNum]],
    ) -> EvalPair:
        """``C = [[0, F], [F^T, 0]]`` with ``D^{[r]} = diag(D_rows[r], D_cols[r])``."""
        s = len(F)
        t = len(F[0]) if s else 0
        if len(D_rows) != len(D_cols):
            raise ValueError("row and column weight sequences must have equal length")
        zero = CycNum.zero()
        C = tuple(
            tuple(zero for _ in range(s)) + tuple(F[i]) for i in range(s)
        ) + tuple(tuple(F[i][j] for i in range(s)) + tuple(zero for _ in range(t)) for j in range(t))
        D = tuple(tuple(D_rows[r]) + tuple(D_cols[r]) for r in range(len(D_rows)))
        return cls(C, D, len(D), row_count=s)

    def block(self) -> CycRows:
        if self.row_count is None:
            raise ValueError("pair is not a bipartisation")
        s = self.row_count
        return tuple(tuple(self.C[i][s:]) for i in range(s))

    @classmethod
    def tensor(cls, first: EvalPair, second: EvalPair) -> EvalPair:
        """Tensor product of two pairs.

        Two bipartisations combine block-wise: the result is the bipartisation of ``F' ⊗ F''`` with row weights
        ``K_rows ⊗ L_rows`` and column weights ``K_cols ⊗ L_cols``. Otherwise every matrix is Kronecker-multiplied.
        """
        modulus = lcm(first.modulus, second.modulus)
        if first.row_count is not None and second.row_count is not None:
            s1, s2 = first.row_count, second.row_count
            F = _kron(first.block(), second.block())
            d_rows = [
                _kron_diag(tuple(first.weight(r, i) for i in range(s1)), tuple(second.weight(r, i) for i in range(s2)))
                for r in range(modulus)
            ]
            d_cols = [
                _kron_diag(
                    tuple(first.weight(r, i) for i in range(s1, first.dim)),
                    tuple(second.weight(r, i) for i in range(s2, second.dim)),
                )
                for r in range(modulus)
            ]
            return cls.bipartisation_of(F, d_rows, d_cols)
        C = _kron(first.C, second.C)
        D = tuple(_kron_diag(first.D[r % first.modulus], second.D[r % second.modulus]) for r in range(modulus))
        return cls(C, D, modulus)
