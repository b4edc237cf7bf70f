"""Principal complex embedding of a ``CycNum``, for display and sign claims only.

Values are evaluated with mpmath interval arithmetic, so an enclosure is carried alongside every approximation.
Equality never goes through this module.
"""

import threading
from decimal import ROUND_HALF_EVEN, Decimal
from typing import Literal

from mpmath import iv
from mpmath.libmp import to_str

from .number import CycNum

_IV_LOCK = threading.Lock()


def _enclosure(z: CycNum, dps: int):
    with _IV_LOCK:
        saved = iv.dps
        iv.dps = dps
        try:
            re = iv.mpf(0)
            im = iv.mpf(0)
            for k, c in enumerate(z.coeffs):
                if not c:
                    continue
                weight = iv.mpf(c.numerator) / c.denominator
                angle = 2 * iv.pi * k / z.conductor
                re += weight * iv.cos(angle)
                im += weight * iv.sin(angle)
            return re, im
        finally:
            iv.dps = saved


def _to_decimal(x, digits: int) -> Decimal:
    value = Decimal(to_str(x.mid._mpi_[0], digits + 10))
    quantized = value.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN)
    return quantized if quantized != 0 else abs(quantized)


def approx_complex(z: CycNum, digits: int = 12) -> tuple[Decimal, Decimal]:
    """Real and imaginary part rounded to ``digits`` decimals."""
    if digits < 1:
        raise ValueError(f"digits must be positive, got {digits}")
    re, im = _enclosure(z, digits + 20)
    return _to_decimal(re, digits), _to_decimal(im, digits)


def _sign(x) -> Literal[-1, 0, 1] | None:
    if x.a > 0:
        return 1
    if x.b < 0:
        return -1
    return None


def certified_sign_real(z: CycNum, dps: int = 40) -> Literal[-1, 0, 1] | None:
    """Sign of the real part of the principal embedding, or None when the enclosure straddles zero.

    An exactly real-zero value is recognised algebraically (``z + conj(z) == 0``) rather than numerically.
    """
    if (z + z.conj()).is_zero():
        return 0
    re, _ = _enclosure(z, dps)
    return _sign(re)


def certified_sign_imag(z: CycNum, dps: int = 40) -> Literal[-1, 0, 1] | None:
    if (z - z.conj()).is_zero():
        return 0
    _, im = _enclosure(z, dps)
    return _sign(im)


def format_approx(z: CycNum, digits: int = 12) -> str:
    re, im = approx_complex(z, digits)
    spec = f".{digits}f"
    sign = "-" if im < 0 else "+"
    return f"{re:{spec}} {sign} {abs(im):{spec}}i"
