"""Integer lattices in row convention, kept in Hermite normal form.

All reductions go through :func:`echelon`, which returns the echelon form ``H`` of an integer matrix together with a
unimodular ``U`` such that ``H = U·B``. Kernels, saturation and quotient bases are read off ``U``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from sympy import Matrix, factorint
from sympy.core.intfunc import igcdex

from ..core.entry import PureEntry
from ..utils.errors import InternalInconsistency, ZeroValue

IntRow = tuple[int, ...]


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _combine(rows: list[list[int]], i: int, j: int, coeffs: tuple[int, int, int, int]) -> None:
    """Replace rows i, j by ``(a·r_i + b·r_j, c·r_i + d·r_j)``."""
    a, b, c, d = coeffs
    ri, rj = rows[i], rows[j]
    rows[i] = [a * x + b * y for x, y in zip(ri, rj, strict=True)]
    rows[j] = [c * x + d * y for x, y in zip(ri, rj, strict=True)]


def echelon(B: Sequence[Sequence[int]], width: int | None = None) -> tuple[list[list[int]], list[list[int]]]:
    """Row echelon form ``H = U·B`` with positive pivots and entries above each pivot reduced into ``[0, pivot)``.

    ``width`` gives the column count when ``B`` has no rows.
    """
    H = [list(map(int, row)) for row in B]
    m = len(H)
    n = len(H[0]) if H else (width or 0)
    U = _identity(m)
    row = 0
    for col in range(n):
        if row == m:
            break
        for i in range(row + 1, m):
            if H[i][col] == 0:
                continue
            a, b = H[row][col], H[i][col]
            if a == 0:
                H[row], H[i] = H[i], H[row]
                U[row], U[i] = U[i], U[row]
                continue
            x, y, g = (int(v) for v in igcdex(a, b))
            coeffs = (x, y, -b // g, a // g)
            _combine(H, row, i, coeffs)
            _combine(U, row, i, coeffs)
        pivot = H[row][col]
        if pivot == 0:
            continue
        if pivot < 0:
            H[row] = [-v for v in H[row]]
            U[row] = [-v for v in U[row]]
            pivot = -pivot
        for r in range(row):
            f = H[r][col] // pivot
            if f:
                H[r] = [u - f * v for u, v in zip(H[r], H[row], strict=True)]
                U[r] = [u - f * v for u, v in zip(U[r], U[row], strict=True)]
        row += 1
    return H, U


def left_kernel(B: Sequence[Sequence[int]], height: int | None = None, width: int | None = None) -> list[IntRow]:
    """Basis of ``{x ∈ Z^m : x·B = 0}``; ``height``/``width`` fix the shape of an empty ``B``."""
    rows = [list(r) for r in B]
    if not rows and height:
        rows = [[0] * (width or 0) for _ in range(height)]
    H, U = echelon(rows, width)
    return [tuple(U[i]) for i in range(len(H)) if not any(H[i])]


def transpose(B: Sequence[Sequence[int]], width: int) -> list[list[int]]:
    return [[row[j] for row in B] for j in range(width)]


@dataclass(frozen=True, slots=True)
class IntLattice:
    """Sublattice of Z^dim spanned by ``basis``, stored in Hermite normal form."""

    dim: int
    basis: tuple[IntRow, ...]

    @classmethod
    def of(cls, dim: int, rows: Sequence[Sequence[int]]) -> IntLattice:
        if any(len(r) != dim for r in rows):
            raise ValueError(f"every generator must have {dim} coordinates")
        H, _ = echelon(rows, dim)
        return cls(dim, tuple(tuple(r) for r in H if any(r)))

    @classmethod
    def full(cls, dim: int) -> IntLattice:
        return cls(dim, tuple(tuple(r) for r in _identity(dim)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, x: Sequence[int]) -> bool:
        rest = list(x)
        for row in self.basis:
            col = next(j for j, v in enumerate(row) if v)
            if rest[col] % row[col]:
                return False
            f = rest[col] // row[col]
            rest = [u - f * v for u, v in zip(rest, row, strict=True)]
        return not any(rest)


def relation_lattice(values: Sequence[PureEntry | Fraction | int]) -> IntLattice:
    """``{x : Π |a_i|^{x_i} = 1}`` for nonzero rational magnitudes, via the prime-exponent matrix."""
    mags = [v.magnitude if isinstance(v, PureEntry) else abs(Fraction(v)) for v in values]
    if any(m == 0 for m in mags):
        raise ZeroValue("multiplicative relations are undefined for zero")
    exps = [_prime_exponents(m) for m in mags]
    primes = sorted({p for e in exps for p in e})
    E = [[e.get(p, 0) for p in primes] for e in exps]
    return IntLattice.of(len(mags), left_kernel(E, len(mags), len(primes)))


def _prime_exponents(value: Fraction) -> dict[int, int]:
    out = {int(p): int(k) for p, k in factorint(value.numerator).items()}
    for p, k in factorint(value.denominator).items():
        out[int(p)] = out.get(int(p), 0) - int(k)
    return out


def saturate(L: IntLattice) -> IntLattice:
    """``Z^n ∩ Q-span(L)``: integer vectors orthogonal to the rational kernel of the basis."""
    if not L.basis:
        return L
    right = left_kernel(transpose(L.basis, L.dim), L.dim, L.rank)
    if not right:
        return IntLattice.full(L.dim)
    return IntLattice.of(L.dim, left_kernel(transpose(right, L.dim), L.dim, len(right)))


def quotient_basis(Lp: IntLattice) -> list[IntRow]:
    """Vectors completing the basis of a saturated lattice to a basis of Z^n."""
    n, t = Lp.dim, Lp.rank
    if t == 0:
        return [tuple(r) for r in _identity(n)]
    _, U = echelon(transpose(Lp.basis, n), t)
    W = Matrix(U).inv().T
    rows = [tuple(int(W[i, j]) for j in range(n)) for i in range(t, n)]
    stacked = Matrix([list(r) for r in Lp.basis] + [list(r) for r in rows])
    if abs(stacked.det()) != 1:
        raise ValueError("lattice is not saturated")
    return rows


@dataclass(frozen=True, slots=True)
class GeneratingSet:
    generators: tuple[PureEntry, ...]
    exponents: tuple[IntRow, ...]
    """Per input entry, the exponent of every generator."""
    roots: tuple[PureEntry, ...]
    """Per input entry, the root-of-unity factor left over."""


def generating_set(entries: Sequence[PureEntry]) -> GeneratingSet:
    """Multiplicatively independent generators (the primes of the magnitudes) and the unique decomposition."""
    if any(e.is_zero() for e in entries):
        raise ZeroValue("generating sets are defined for nonzero entries only")
    exps = [_prime_exponents(e.magnitude) for e in entries]
    primes = sorted({p for e in exps for p in e})
    out = GeneratingSet(
        tuple(PureEntry(Fraction(p)) for p in primes),
        tuple(tuple(e.get(p, 0) for p in primes) for e in exps),
        tuple(PureEntry(Fraction(1), e.root_order, e.root_exp) for e in entries),
    )
    for e, row, root in zip(entries, out.exponents, out.roots, strict=True):
        value = root
        for g, k in zip(out.generators, row, strict=True):
            value = value * g**k
        if value != e:
            raise InternalInconsistency(f"generating set does not reproduce {e}")
    return out
