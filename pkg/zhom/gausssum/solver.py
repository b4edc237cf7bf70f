"""Polynomial-time evaluation of ``Z_q(f) = Σ_{x ∈ Z_q^n} ω_q^{f(x)}`` for a prime power q.

Each round either settles the sum, removes a variable, or (for q = 2^k) halves the modulus. Prefactors collected on
the way are kept in one running ``CycNum``.

Odd p: complete the square on a square term whose coefficient has the least p-adic order among quadratic terms;
if no square term reaches that order, rotate a cross term first with ``x_i = x_i' + x_j'``, ``x_j = x_i' - x_j'``.

p = 2, k >= 2: first make every cross and linear coefficient even. The sum only sees assignments where the affine
form multiplying the first offending variable is even, and substituting ``x_l = c^{-1}(2x_l' - r)`` parametrises
those assignments twice over. Then either every square coefficient is even and the modulus halves, or an odd square
term is eliminated by completing the square. p = 2, k = 1 sums out a variable of an odd cross term, which pins
another variable to an affine function of the rest.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

from ..cyclotomic import CycNum, make_root
from ..utils.log import get_logger
from .poly import AffineForm, PolyBuilder, QuadPoly, prime_power

logger = get_logger(__name__)


def one_var_sum(q: int, a: int, b: int) -> CycNum:
    """``Σ_{x ∈ Z_q} ω_q^{ax² + bx}`` by direct summation."""
    counts = Counter((a * x * x + b * x) % q for x in range(q))
    return CycNum.from_exponent_counts(q, counts)


def two_var_sum(q: int, a: int, b: int, c: int) -> CycNum:
    """``Σ_{x, y ∈ Z_q} ω_q^{ax² + bxy + cy²}`` by direct summation."""
    counts = Counter((a * x * x + b * x * y + c * y * y) % q for x in range(q) for y in range(q))
    return CycNum.from_exponent_counts(q, counts)


def _valuation(c: int, p: int) -> int:
    t = 0
    while c % p == 0:
        c //= p
        t += 1
    return t


def _zero_at(quad: dict[tuple[int, int], int], lin: dict[int, int], t: int, k: int) -> bool:
    for (i, j), c in quad.items():
        if i != j and t in (i, j) and c % 2:
            return False
    effective = lin.get(t, 0)
    if k == 1:
        effective += quad.get((t, t), 0)
    return effective % 2 == 1


def detect_zero_case(f: QuadPoly, t: int) -> bool:
    """True when parity alone forces ``Z_q(f) = 0`` through variable ``t`` (q a power of 2).

    Every cross coefficient touching ``x_t`` is even and the coefficient of ``x_t`` in the linear part is odd
    (for q = 2 the square term counts as linear, since x² = x on Z_2).
    """
    if f.p != 2:
        return False
    return _zero_at(dict(f.quad), dict(f.lin), t, f.k)


class _Reduction:
    def __init__(self, f: QuadPoly):
        self.p, self.k, self.q = f.p, f.k, f.q
        self.quad: dict[tuple[int, int], int] = dict(f.quad)
        self.lin: dict[int, int] = dict(f.lin)
        self.n_total = f.n
        self.vars: set[int] = set(range(f.n))
        self.factor = make_root(f.q, f.const)
        self.scale = Fraction(1)
        self.steps = 0

    # ---------------------------------------------------------------- bookkeeping
    def _result(self, value: CycNum | None = None) -> CycNum:
        out = self.factor if value is None else self.factor * value
        return out * self.scale

    def _zero(self) -> CycNum:
        return CycNum.zero(self.q)

    def _drop_free(self) -> None:
        used = {v for key in self.quad for v in key} | set(self.lin)
        free = self.vars - used
        if free:
            self.scale *= self.q ** len(free)
            self.vars -= free

    def _cross(self, i: int) -> dict[int, int]:
        out: dict[int, int] = {}
        for (a, b), c in self.quad.items():
            if a != b and i in (a, b):
                out[b if a == i else a] = c
        return out

    def _remove(self, i: int) -> None:
        self.quad = {key: c for key, c in self.quad.items() if i not in key}
        self.lin.pop(i, None)
        self.vars.discard(i)

    def _rebuild(self, images: dict[int, AffineForm]) -> None:
        """Apply a simultaneous affine change of variables."""
        builder = PolyBuilder(self.q, self.n_total)
        for (i, j), c in self.quad.items():
            builder.add_product(images.get(i) or AffineForm.var(i), images.get(j) or AffineForm.var(j), c)
        for i, c in self.lin.items():
            builder.add_form(images.get(i) or AffineForm.var(i), c)
        self._absorb(builder)

    def _absorb(self, builder: PolyBuilder) -> None:
        self.quad = {key: c for key, c in builder.quad.items() if c % self.q}
        self.lin = {i: c for i, c in builder.lin.items() if c % self.q}
        if builder.const % self.q:
            self.factor = self.factor * make_root(self.q, builder.const)

    def _add_square_remainder(self, form: AffineForm, scale: int, linear_scale: int = 0) -> None:
        """Add ``scale·form² + linear_scale·form`` to the current polynomial."""
        builder = PolyBuilder(self.q, self.n_total)
        builder.quad.update(self.quad)
        builder.lin.update(self.lin)
        builder.add_product(form, form, scale)
        builder.add_form(form, linear_scale)
        self._absorb(builder)

    # ---------------------------------------------------------------- driver
    def run(self) -> CycNum:
        while True:
            self._drop_free()
            if not self.vars:
                return self._result()
            if not self.quad:
                # every remaining variable carries a nonzero linear coefficient
                return self._zero()
            self.steps += 1
            outcome = self._step_odd() if self.p != 2 else self._step_even()
            if outcome is not None:
                return outcome

    # ---------------------------------------------------------------- odd p
    def _step_odd(self) -> CycNum | None:
        q, p = self.q, self.p
        t0 = min(_valuation(c, p) for c in self.quad.values())
        for (i, j), c in sorted(self.quad.items()):
            if i == j and _valuation(c, p) == t0:
                return self._complete_square_odd(i, t0)
        i, j = next(key for key, c in sorted(self.quad.items()) if _valuation(c, p) == t0)
        logger.debug(f"rotating x{i}, x{j} over Z_{q}")
        self._rebuild({i: AffineForm({i: 1, j: 1}), j: AffineForm({i: 1, j: q - 1})})
        return None

    def _complete_square_odd(self, i: int, t0: int) -> CycNum | None:
        q, pt = self.q, self.p**t0
        c11 = self.quad[(i, i)]
        c1 = self.lin.get(i, 0)
        inv = pow(2 * (c11 // pt), -1, q)
        shift = AffineForm({j: (a // pt) * inv % q for j, a in self._cross(i).items()})
        base = one_var_sum(q, c11, c1)
        if base.is_zero():
            return self._zero()
        self.factor = self.factor * base
        self._remove(i)
        self._add_square_remainder(shift, -c11, -c1)
        return None

    # ---------------------------------------------------------------- p = 2
    def _step_even(self) -> CycNum | None:
        if self.k == 1:
            return self._step_mod_two()
        order = sorted(self.vars)
        for t in order:
            cross = {j: c for j, c in self._cross(t).items() if j > t}
            if self.lin.get(t, 0) % 2 == 0 and all(c % 2 == 0 for c in cross.values()):
                continue
            if _zero_at(self.quad, self.lin, t, self.k):
                return self._zero()
            ell = min(j for j, c in cross.items() if c % 2)
            self._parity_substitution(t, ell)
            return None
        if all(c % 2 == 0 for c in self.quad.values()):
            self._halve()
            return None
        i = min(a for (a, b), c in self.quad.items() if a == b and c % 2)
        return self._complete_square_even(i)

    def _parity_substitution(self, t: int, ell: int) -> None:
        q = self.q
        cross = self._cross(t)
        inv = pow(cross[ell], -1, q)
        rest = {j: c for j, c in cross.items() if j != ell}
        form = AffineForm({ell: 2 * inv, **{j: -inv * c for j, c in rest.items()}}, -inv * self.lin.get(t, 0))
        self._rebuild({ell: form})
        self.scale /= 2

    def _halve(self) -> None:
        self.scale *= 2 ** len(self.vars)
        self.quad = {key: c // 2 for key, c in self.quad.items()}
        self.lin = {i: c // 2 for i, c in self.lin.items()}
        self.q //= 2
        self.k -= 1
        self.quad = {key: c for key, c in self.quad.items() if c}
        self.lin = {i: c for i, c in self.lin.items() if c}
        logger.debug(f"halved modulus to {self.q} with {len(self.vars)} variables")

    def _complete_square_even(self, i: int) -> CycNum | None:
        q = self.q
        a = self.quad[(i, i)]
        inv = pow(a, -1, q)
        half = AffineForm({j: c // 2 for j, c in self._cross(i).items()}, self.lin.get(i, 0) // 2)
        shift = half.scaled(inv)
        base = one_var_sum(q, a, 0)
        self.factor = self.factor * base
        self._remove(i)
        self._add_square_remainder(shift, -a)
        return None

    def _step_mod_two(self) -> CycNum | None:
        for (a, b), c in list(self.quad.items()):
            if a == b:
                del self.quad[(a, b)]
                self.lin[a] = (self.lin.get(a, 0) + c) % 2
        self.lin = {i: c for i, c in self.lin.items() if c}
        if not self.quad:
            return None
        i, j = min(self.quad)
        cross = self._cross(i)
        pinned = AffineForm({v: c for v, c in cross.items() if v != j}, self.lin.get(i, 0))
        self._remove(i)
        self.scale *= 2
        self._rebuild({j: pinned})
        self.vars.discard(j)
        return None


def reduce_gauss_sum(f: QuadPoly) -> tuple[CycNum, int]:
    """``Z_q(f)`` together with the number of reduction rounds it took.

    Rounds are bounded by a polynomial in n and k; for odd q there are at most ``2n`` of them.
    """
    prime_power(f.q)
    reduction = _Reduction(f)
    value = reduction.run()
    logger.debug(f"Z_{f.q} in {f.n} variables reduced in {reduction.steps} rounds")
    return value, reduction.steps


def eval_gauss_sum(f: QuadPoly) -> CycNum:
    """Exact ``Σ_{x ∈ Z_q^n} ω_q^{f(x)}`` at conductor q."""
    return reduce_gauss_sum(f)[0]
