from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm

from ..cyclotomic import CycNum, make_root
from ..utils.errors import NonPureEntry, ParseError

_TOKEN = re.compile(
    r"^\s*(?:(?P<num>[+-]?\d+)(?:/(?P<den>\d+))?)?\s*(?:(?P<star>\*)?\s*w\(\s*(?P<n>\d+)\s*,\s*(?P<k>[+-]?\d+)\s*\))?\s*$"
)


@dataclass(frozen=True, slots=True)
class PureEntry:
    """A rational magnitude times a root of unity, ``magnitude·ω_{root_order}^{root_exp}``.

    Construction canonicalises: negative magnitudes absorb a factor ω_2, ``root_exp/root_order`` is reduced to lowest
    terms and zero is always ``(0, 1, 0)``. Equality is therefore structural.
    """

    magnitude: Fraction
    root_order: int = 1
    root_exp: int = 0

    def __post_init__(self) -> None:
        mag = Fraction(self.magnitude)
        order, exp = self.root_order, self.root_exp
        if order < 1:
            raise ValueError(f"root order must be positive, got {order}")
        if mag < 0:
            mag = -mag
            order2 = lcm(order, 2)
            exp = exp * (order2 // order) + order2 // 2
            order = order2
        if mag == 0:
            order, exp = 1, 0
        exp %= order
        g = gcd(exp, order)
        if exp == 0:
            order = 1
        elif g > 1:
            order, exp = order // g, exp // g
        object.__setattr__(self, "magnitude", mag)
        object.__setattr__(self, "root_order", order)
        object.__setattr__(self, "root_exp", exp)

    @classmethod
    def of(cls, value: PureEntry | int | Fraction) -> PureEntry:
        if isinstance(value, PureEntry):
            return value
        return cls(Fraction(value))

    @classmethod
    def root(cls, order: int, exp: int, magnitude: int | Fraction = 1) -> PureEntry:
        return cls(Fraction(magnitude), order, exp)

    @classmethod
    def from_cycnum(cls, z: CycNum) -> PureEntry:
        """Split an exact number into magnitude and root of unity; ``NonPureEntry`` when impossible."""
        if z.is_zero():
            return cls(Fraction(0))
        norm = z.norm_sq()
        if not norm.is_rational():
            raise NonPureEntry(f"{z!r} has an irrational absolute value")
        sq = norm.rational_value()
        num, den = isqrt(sq.numerator), isqrt(sq.denominator)
        if num * num != sq.numerator or den * den != sq.denominator:
            raise NonPureEntry(f"{z!r} has an irrational absolute value")
        root = (z / Fraction(num, den)).root_exponent()
        if root is None:
            raise NonPureEntry(f"{z!r} is not a rational multiple of a root of unity")
        return cls(Fraction(num, den), root[0], root[1])

    def is_zero(self) -> bool:
        return self.magnitude == 0

    def to_cycnum(self) -> CycNum:
        if self.is_zero():
            return CycNum.zero()
        return make_root(self.root_order, self.root_exp) * self.magnitude

    def exponent_at(self, modulus: int) -> int:
        """k with root part = ω_modulus^k. The root order must divide ``modulus``."""
        if modulus % self.root_order:
            raise ValueError(f"root order {self.root_order} does not divide {modulus}")
        return self.root_exp * (modulus // self.root_order)

    def conj(self) -> PureEntry:
        return PureEntry(self.magnitude, self.root_order, -self.root_exp)

    def __mul__(self, other: PureEntry) -> PureEntry:
        if not isinstance(other, PureEntry):
            return NotImplemented
        order = lcm(self.root_order, other.root_order)
        exp = self.exponent_at(order) + other.exponent_at(order)
        return PureEntry(self.magnitude * other.magnitude, order, exp)

    def __pow__(self, exponent: int) -> PureEntry:
        if exponent < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return PureEntry(1 / self.magnitude ** (-exponent), self.root_order, self.root_exp * exponent)
        return PureEntry(self.magnitude**exponent, self.root_order, self.root_exp * exponent)

    def scaled(self, c: int | Fraction) -> PureEntry:
        return PureEntry(self.magnitude * Fraction(c), self.root_order, self.root_exp)

    def __str__(self) -> str:
        return format_entry(self)


def format_entry(e: PureEntry) -> str:
    if e.is_zero():
        return "0"
    text = f"{e.magnitude.numerator}/{e.magnitude.denominator}"
    if e.root_order > 1:
        text += f"*w({e.root_order},{e.root_exp})"
    return text


def parse_entry(token: str, line_no: int | None = None) -> PureEntry:
    """Parse ``NUM``, ``NUM/DEN``, ``NUM/DEN*w(N,K)`` or ``w(N,K)``."""
    m = _TOKEN.match(token)
    if not m or (m.group("num") is None and m.group("n") is None):
        raise ParseError(f"malformed entry {token!r}", line_no)
    if m.group("star") and m.group("num") is None:
        raise ParseError(f"malformed entry {token!r}", line_no)
    if m.group("num") is not None and m.group("n") is not None and not m.group("star"):
        raise ParseError(f"missing '*' in entry {token!r}", line_no)
    num = int(m.group("num")) if m.group("num") is not None else 1
    den = int(m.group("den")) if m.group("den") is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in entry {token!r}", line_no)
    order, exp = 1, 0
    if m.group("n") is not None:
        order, exp = int(m.group("n")), int(m.group("k"))
        if order < 1:
            raise ParseError(f"root order must be positive in entry {token!r}", line_no)
    return PureEntry(Fraction(num, den), order, exp)
