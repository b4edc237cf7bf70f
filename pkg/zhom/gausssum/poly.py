from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from functools import lru_cache

from sympy import factorint

from ..utils.errors import NotPrimePower


@lru_cache(maxsize=None)
def prime_power(q: int) -> tuple[int, int]:
    """(p, k) with q = p^k; ``NotPrimePower`` otherwise."""
    if q < 2:
        raise NotPrimePower(f"modulus {q} is not a prime power")
    factors = factorint(q)
    if len(factors) != 1:
        raise NotPrimePower(f"modulus {q} is not a prime power")
    ((p, k),) = factors.items()
    return int(p), int(k)


@dataclass(frozen=True, slots=True)
class AffineForm:
    """``Σ coeffs[v]·x_v + const`` with integer coefficients."""

    coeffs: Mapping[int, int] = field(default_factory=dict)
    const: int = 0

    @classmethod
    def var(cls, v: int, c: int = 1) -> AffineForm:
        return cls({v: c}, 0)

    def scaled(self, c: int) -> AffineForm:
        return AffineForm({v: a * c for v, a in self.coeffs.items()}, self.const * c)

    def __add__(self, other: AffineForm) -> AffineForm:
        out = dict(self.coeffs)
        for v, a in other.coeffs.items():
            out[v] = out.get(v, 0) + a
        return AffineForm(out, self.const + other.const)

    def evaluate(self, x: Sequence[int]) -> int:
        return sum(a * x[v] for v, a in self.coeffs.items()) + self.const


class PolyBuilder:
    """Mutable accumulator for a quadratic polynomial over Z_q."""

    def __init__(self, q: int, n: int):
        self.q = q
        self.n = n
        self.quad: dict[tuple[int, int], int] = {}
        self.lin: dict[int, int] = {}
        self.const = 0

    def add_quad(self, i: int, j: int, c: int) -> None:
        key = (i, j) if i <= j else (j, i)
        self.quad[key] = (self.quad.get(key, 0) + c) % self.q

    def add_lin(self, i: int, c: int) -> None:
        self.lin[i] = (self.lin.get(i, 0) + c) % self.q

    def add_const(self, c: int) -> None:
        self.const = (self.const + c) % self.q

    def add_form(self, form: AffineForm, scale: int = 1) -> None:
        for v, a in form.coeffs.items():
            self.add_lin(v, scale * a)
        self.add_const(scale * form.const)

    def add_product(self, left: AffineForm, right: AffineForm, scale: int = 1) -> None:
        """Add ``scale·left·right``."""
        for u, a in left.coeffs.items():
            if not a:
                continue
            for v, b in right.coeffs.items():
                if b:
                    self.add_quad(u, v, scale * a * b)
            if right.const:
                self.add_lin(u, scale * a * right.const)
        if left.const:
            for v, b in right.coeffs.items():
                self.add_lin(v, scale * left.const * b)
            self.add_const(scale * left.const * right.const)

    def add_poly(self, f: QuadPoly, offset: int = 0) -> None:
        for (i, j), c in f.quad.items():
            self.add_quad(i + offset, j + offset, c)
        for i, c in f.lin.items():
            self.add_lin(i + offset, c)
        self.add_const(f.const)

    def build(self) -> QuadPoly:
        return QuadPoly.build(self.q, self.n, self.quad, self.lin, self.const)


@dataclass(frozen=True, slots=True, eq=True)
class QuadPoly:
    """``Σ_{i<=j} quad[i,j]·x_i·x_j + Σ lin[i]·x_i + const`` over Z_q, q = p^k.

    Coefficients are reduced into ``[0, q)`` and zero coefficients are not stored.
    """

    q: int
    n: int
    quad: Mapping[tuple[int, int], int]
    lin: Mapping[int, int]
    const: int
    p: int
    k: int

    @classmethod
    def build(
        cls,
        q: int,
        n: int,
        quad: Mapping[tuple[int, int], int] | None = None,
        lin: Mapping[int, int] | None = None,
        const: int = 0,
    ) -> QuadPoly:
        p, k = prime_power(q)
        if n < 0:
            raise ValueError(f"variable count must be non-negative, got {n}")
        reduced_quad: dict[tuple[int, int], int] = {}
        for (i, j), c in (quad or {}).items():
            key = (i, j) if i <= j else (j, i)
            if not (0 <= key[0] and key[1] < n):
                raise ValueError(f"quadratic term {key} out of range for {n} variables")
            reduced_quad[key] = (reduced_quad.get(key, 0) + c) % q
        reduced_lin: dict[int, int] = {}
        for i, c in (lin or {}).items():
            if not 0 <= i < n:
                raise ValueError(f"linear term {i} out of range for {n} variables")
            reduced_lin[i] = (reduced_lin.get(i, 0) + c) % q
        return cls(
            q,
            n,
            {key: c for key, c in sorted(reduced_quad.items()) if c},
            {i: c for i, c in sorted(reduced_lin.items()) if c},
            const % q,
            p,
            k,
        )

    @classmethod
    def zero(cls, q: int, n: int) -> QuadPoly:
        return cls.build(q, n)

    def __hash__(self) -> int:
        return hash((self.q, self.n, tuple(self.quad.items()), tuple(self.lin.items()), self.const))

    def evaluate(self, x: Sequence[int]) -> int:
        total = self.const
        for (i, j), c in self.quad.items():
            total += c * x[i] * x[j]
        for i, c in self.lin.items():
            total += c * x[i]
        return total % self.q

    def is_affine(self) -> bool:
        return not self.quad

    def to_builder(self, n: int | None = None) -> PolyBuilder:
        builder = PolyBuilder(self.q, self.n if n is None else n)
        builder.add_poly(self)
        return builder

    # ---------------------------------------------------------------- helpers
    def shifted(self, c: int) -> QuadPoly:
        """``f + c``."""
        return QuadPoly.build(self.q, self.n, self.quad, self.lin, self.const + c)

    def relabeled(self, perm: Sequence[int]) -> QuadPoly:
        """Variable ``i`` becomes variable ``perm[i]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("relabelling must be a permutation of the variables")
        quad = {(perm[i], perm[j]): c for (i, j), c in self.quad.items()}
        lin = {perm[i]: c for i, c in self.lin.items()}
        return QuadPoly.build(self.q, self.n, quad, lin, self.const)

    def with_unused(self, extra: int = 1) -> QuadPoly:
        return QuadPoly.build(self.q, self.n + extra, self.quad, self.lin, self.const)

    def substituted(self, images: Mapping[int, AffineForm]) -> QuadPoly:
        """Simultaneously replace each ``x_v`` in ``images`` by its affine form."""
        builder = PolyBuilder(self.q, self.n)

        def image(v: int) -> AffineForm:
            return images.get(v) or AffineForm.var(v)

        for (i, j), c in self.quad.items():
            builder.add_product(image(i), image(j), c)
        for i, c in self.lin.items():
            builder.add_form(image(i), c)
        builder.add_const(self.const)
        return builder.build()
