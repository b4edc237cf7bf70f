"""Exact elements of cyclotomic fields Q(ω_N).

A ``CycNum`` stores its coordinates in the power basis ``1, ω_N, ..., ω_N^{φ(N)-1}`` after reduction modulo the
N-th cyclotomic polynomial, so two numbers at the same conductor are equal iff their coordinate tuples are equal.
Binary operations move both operands to the lcm of their conductors first.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from numbers import Rational

from sympy import QQ, Poly, Rational as SympyRational, cyclotomic_poly, factorint, symbols, totient

from ..utils.errors import NonDivisibleConductor, NotRational

_X = symbols("x")

Scalar = int | Fraction


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return int(totient(n))


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Coefficients of Φ_n, lowest degree first. Monic of degree φ(n)."""
    poly = Poly(cyclotomic_poly(n, _X), _X)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    exps = factorint(n)
    if any(e > 1 for e in exps.values()):
        return 0
    return -1 if len(exps) % 2 else 1


@lru_cache(maxsize=None)
def _normalized_traces(n: int) -> tuple[Fraction, ...]:
    # Tr(ω_n^k) / φ(n), which does not depend on the conductor an element is written at
    out = []
    for k in range(euler_phi(n)):
        order = n // gcd(n, k)
        out.append(Fraction(_mobius(order), euler_phi(order)))
    return tuple(out)


def _reduce(conductor: int, values: Sequence[Scalar]) -> tuple[Fraction, ...]:
    """Reduce a coefficient list in powers of ω_N first modulo x^N - 1, then modulo Φ_N."""
    folded = [Fraction(0)] * conductor
    for i, v in enumerate(values):
        if v:
            folded[i % conductor] += v
    phi_coeffs = cyclotomic_coeffs(conductor)
    degree = len(phi_coeffs) - 1
    for i in range(conductor - 1, degree - 1, -1):
        c = folded[i]
        if not c:
            continue
        folded[i] = Fraction(0)
        base = i - degree
        for j in range(degree):
            if phi_coeffs[j]:
                folded[base + j] -= c * phi_coeffs[j]
    return tuple(folded[:degree])


def _to_fraction(value: Scalar | Rational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True, slots=True, eq=False)
class CycNum:
    conductor: int
    coeffs: tuple[Fraction, ...]

    # ---------------------------------------------------------------- constructors
    @classmethod
    def from_power_coeffs(cls, conductor: int, values: Sequence[Scalar]) -> CycNum:
        """Build Σ values[k]·ω_N^k for an arbitrary-length list of powers."""
        if conductor < 1:
            raise ValueError(f"conductor must be positive, got {conductor}")
        return cls(conductor, _reduce(conductor, values))

    @classmethod
    def from_exponent_counts(cls, conductor: int, counts: Mapping[int, Scalar] | Sequence[Scalar]) -> CycNum:
        """Build Σ_k counts[k]·ω_N^k, exponents taken mod N."""
        folded: list[Scalar] = [0] * conductor
        items = counts.items() if isinstance(counts, Mapping) else enumerate(counts)
        for k, c in items:
            folded[k % conductor] += c
        return cls.from_power_coeffs(conductor, folded)

    @classmethod
    def rational(cls, value: Scalar, conductor: int = 1) -> CycNum:
        return cls.from_power_coeffs(conductor, [_to_fraction(value)])

    @classmethod
    def zero(cls, conductor: int = 1) -> CycNum:
        return cls(conductor, (Fraction(0),) * euler_phi(conductor))

    @classmethod
    def one(cls, conductor: int = 1) -> CycNum:
        return cls.rational(1, conductor)

    # ---------------------------------------------------------------- conductor handling
    def embed(self, target: int) -> CycNum:
        if target == self.conductor:
            return self
        if target % self.conductor:
            raise NonDivisibleConductor(f"conductor {self.conductor} does not divide {target}")
        step = target // self.conductor
        values: list[Fraction] = [Fraction(0)] * target
        for k, c in enumerate(self.coeffs):
            values[k * step] = c
        return CycNum.from_power_coeffs(target, values)

    def _unified(self, other: CycNum) -> tuple[CycNum, CycNum]:
        if self.conductor == other.conductor:
            return self, other
        common = lcm(self.conductor, other.conductor)
        return self.embed(common), other.embed(common)

    def _coerce(self, other: object) -> CycNum | None:
        if isinstance(other, CycNum):
            return other
        if isinstance(other, int | Fraction):
            return CycNum.rational(other, self.conductor)
        return None

    # ---------------------------------------------------------------- ring operations
    def __add__(self, other: object) -> CycNum:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self._unified(rhs)
        return CycNum(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs, strict=True)))

    __radd__ = __add__

    def __neg__(self) -> CycNum:
        return CycNum(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other: object) -> CycNum:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> CycNum:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> CycNum:
        if isinstance(other, int | Fraction):
            return CycNum(self.conductor, tuple(c * other for c in self.coeffs))
        if not isinstance(other, CycNum):
            return NotImplemented
        a, b = self._unified(other)
        if a.is_zero() or b.is_zero():
            return CycNum.zero(a.conductor)
        product = [Fraction(0)] * (2 * len(a.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    product[i + j] += x * y
        return CycNum.from_power_coeffs(a.conductor, product)

    __rmul__ = __mul__

    def inverse(self) -> CycNum:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return CycNum.rational(1 / self.coeffs[0], self.conductor)
        highest_first = [SympyRational(c.numerator, c.denominator) for c in reversed(self.coeffs)]
        modulus = Poly(list(reversed(cyclotomic_coeffs(self.conductor))), _X, domain=QQ)
        inv = Poly(highest_first, _X, domain=QQ).invert(modulus)
        values = [Fraction(int(c.p), int(c.q)) for c in reversed(inv.all_coeffs())]
        return CycNum.from_power_coeffs(self.conductor, values)

    def __truediv__(self, other: object) -> CycNum:
        if isinstance(other, int | Fraction):
            if not other:
                raise ZeroDivisionError("division by zero")
            return CycNum(self.conductor, tuple(c / other for c in self.coeffs))
        if not isinstance(other, CycNum):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: object) -> CycNum:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs * self.inverse()

    def __pow__(self, exponent: int) -> CycNum:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycNum.one(self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # ---------------------------------------------------------------- equality
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self._unified(rhs)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        traces = _normalized_traces(self.conductor)
        return hash(sum((c * t for c, t in zip(self.coeffs, traces, strict=True)), Fraction(0)))

    # ---------------------------------------------------------------- automorphisms
    def galois(self, k: int) -> CycNum:
        """The automorphism ω_N ↦ ω_N^k."""
        n = self.conductor
        if gcd(k, n) != 1:
            raise ValueError(f"galois exponent {k} is not a unit mod {n}")
        values = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            if c:
                values[(i * k) % n] += c
        return CycNum.from_power_coeffs(n, values)

    def conj(self) -> CycNum:
        if self.conductor <= 2:
            return self
        return self.galois(self.conductor - 1)

    def norm_sq(self) -> CycNum:
        return self * self.conj()

    # ---------------------------------------------------------------- rational part
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise NotRational(f"{format_cycnum(self)} is not rational")
        return self.coeffs[0]

    # ---------------------------------------------------------------- roots of unity
    def exponent_in(self, modulus: int) -> int | None:
        """The k in [0, modulus) with self = ω_modulus^k, or None."""
        if self.is_zero():
            return None
        if self.is_rational():
            value = self.coeffs[0]
            if value == 1:
                return 0
            if value == -1 and modulus % 2 == 0:
                return modulus // 2
            return None
        common = lcm(self.conductor, modulus)
        here = self.embed(common)
        step = common // modulus
        for k in range(modulus):
            if make_root(common, k * step).coeffs == here.coeffs:
                return k
        return None

    def root_exponent(self) -> tuple[int, int] | None:
        """(order d, k) with self = ω_d^k and gcd(k, d) = 1, or None when not a root of unity."""
        if self.is_zero():
            return None
        bound = lcm(2, self.conductor)
        if self ** bound != 1:
            return None
        k = self.exponent_in(bound)
        if k is None:
            return None
        g = gcd(k, bound)
        return bound // g, k // g

    def is_root_of_unity(self) -> bool:
        return self.root_exponent() is not None

    def __repr__(self) -> str:
        return f"CycNum({format_cycnum(self)})"


@lru_cache(maxsize=4096)
def make_root(n: int, k: int) -> CycNum:
    """ω_n^{k mod n} in canonical form."""
    if n < 1:
        raise ValueError(f"root order must be positive, got {n}")
    values = [0] * n
    values[k % n] = 1
    return CycNum.from_power_coeffs(n, values)


def embed_conductor(z: CycNum, target: int) -> CycNum:
    return z.embed(target)


def common_conductor(values: Iterable[CycNum]) -> int:
    out = 1
    for v in values:
        out = lcm(out, v.conductor)
    return out


def cyc_sum(values: Iterable[CycNum], conductor: int = 1) -> CycNum:
    total = CycNum.zero(conductor)
    for v in values:
        total = total + v
    return total


def cyc_prod(values: Iterable[CycNum], conductor: int = 1) -> CycNum:
    total = CycNum.one(conductor)
    for v in values:
        total = total * v
        if total.is_zero():
            return total
    return total


def format_cycnum(z: CycNum) -> str:
    body = ", ".join(f"{c.numerator}/{c.denominator}" for c in z.coeffs)
    return f"N={z.conductor}; {body}"


def parse_cycnum(text: str) -> CycNum:
    head, sep, body = text.strip().partition(";")
    if not sep or not head.strip().startswith("N="):
        raise ValueError(f"malformed cyclotomic number: {text!r}")
    conductor = int(head.strip()[2:])
    coeffs = tuple(Fraction(tok.strip()) for tok in body.split(",")) if body.strip() else ()
    if len(coeffs) != euler_phi(conductor):
        raise ValueError(f"expected {euler_phi(conductor)} coefficients for N={conductor}, got {len(coeffs)}")
    return CycNum(conductor, coeffs)
