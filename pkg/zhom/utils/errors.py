"""Error kinds raised across the package.

Every error derives from ``ZhomError`` so that the CLI can map failures to exit codes in one place.
"""


class ZhomError(Exception):
    """Root of all library errors."""


class NonDivisibleConductor(ZhomError):
    """A cyclotomic number was asked to move to a conductor its own conductor does not divide."""


class NotRational(ZhomError):
    """A cyclotomic number has a nonzero coefficient beyond the constant term."""


class ParseError(ZhomError):
    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        prefix = f"line {line_no}: " if line_no is not None else ""
        super().__init__(prefix + message)


class SizeGuardExceeded(ZhomError):
    """A brute-force enumeration would visit more assignments than the configured guard."""

    def __init__(self, work: int, guard: int):
        self.work = work
        self.guard = guard
        super().__init__(f"enumeration needs {work} assignments, guard is {guard}")


class NotPrimePower(ZhomError):
    """A Gauss-sum modulus is not a prime power."""


class ZeroValue(ZhomError):
    """A zero magnitude reached an operation that needs nonzero values."""


class InternalInconsistency(ZhomError):
    """An exact recheck disagreed with a derived quantity. Always a bug."""


class NonPureEntry(ZhomError):
    """A matrix entry is not a rational multiple of a root of unity."""


class NotSymmetric(ZhomError):
    """A matrix that must be symmetric is not."""


class InvalidCertificate(ZhomError):
    """A certificate does not belong to the matrix it is used with."""
