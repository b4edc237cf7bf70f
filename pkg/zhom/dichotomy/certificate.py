"""Verdicts, hardness witnesses and tractability certificates.

Certificates are pydantic models serialised to indented JSON. Exact numbers are stored as text: rationals as
``num/den`` and cyclotomic numbers in the ``N=<n>; c0, c1, …`` format. Roots of unity produced by the
normalisation are stored as exponents of ``ω_{N'}`` (``None`` for zero).
"""

from __future__ import annotations

import pathlib
from fractions import Fraction
from typing import Any, Literal

from pydantic import BaseModel, Field, ValidationError

from ..cyclotomic import CycNum, format_cycnum, parse_cycnum
from ..utils.errors import InvalidCertificate
from ..utils.path import FileUtils


def frac_text(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_frac(text: str) -> Fraction:
    return Fraction(text)


def cyc_text(z: CycNum) -> str:
    return format_cycnum(z)


def parse_cyc(text: str) -> CycNum:
    return parse_cycnum(text)


class Witness(BaseModel):
    """A violated tractability condition, with the data needed to re-check it."""

    stage: Literal["step1", "step2", "step3"]
    condition: str
    """One of bulatov-grohe, orthogonality, unitary, block-constant, rank-one, root-of-unity, group-condition,
    fourier, coset, quadratic"""
    component: list[int] = Field(default_factory=list)
    """Indices of the matrix component the condition fails on"""
    details: dict[str, Any] = Field(default_factory=dict)

    @property
    def label(self) -> str:
        return f"{self.stage}:{self.condition}"


class GeneratorStep(BaseModel):
    """``Y(z + g) = ω_{N'}^{alpha} · χ_shift(z) · Y(z)`` on the whole support block."""

    shift: list[int]
    alpha: int


class PrimeSupport(BaseModel):
    prime: int
    coords: list[int]
    """Group coordinates whose modulus is a power of ``prime``"""
    moduli: list[int]
    pivot: list[int]
    """Projection of the support pivot; the uniform map is based here"""
    generators: list[list[int]]
    orders: list[int]
    steps: list[GeneratorStep]
    """One difference equation per generator, same order"""


class SupportData(BaseModel):
    """Support of one ``Y'^{[r]}``: a coset of the group, its pivot and its prime blocks."""

    representative: list[int]
    generators: list[list[int]]
    orders: list[int]
    pivot: list[int]
    primes: list[PrimeSupport]


class SideData(BaseModel):
    """One side (rows or columns) of a component after purification, twin reduction and normalisation."""

    indices: list[int]
    """Local component indices on this side, in order"""
    norms: list[str]
    """Rational norm factor per position"""
    norm_groups: list[str]
    """Distinct norms, strictly decreasing"""
    classes: list[int]
    """Twin class of every position"""
    phases: list[int]
    """Exponent of ω_N relating each position to its class representative"""
    K: list[list[str]] = Field(default_factory=list)
    """``K[r][i]`` for r in [0, N): norm-group factor of D^{[r]}"""
    L: list[list[str]] = Field(default_factory=list)
    """``L[r][a]`` for r in [0, N): class factor of D^{[r]}, 1 at its pivot"""
    pivots: list[int | None] = Field(default_factory=list)
    """Per r in [0, N'): least class with L = 1, None when D^{[r]} vanishes"""
    Y: list[list[int | None]] = Field(default_factory=list)
    """Per r in [0, N'): normalised weights as exponents of ω_{N'}"""
    points: list[list[int]] = Field(default_factory=list)
    """Group point of every class"""
    supports: list[SupportData | None] = Field(default_factory=list)
    """Per r in [0, N')"""


class FourierFactor(BaseModel):
    prime: int
    q: int
    coords: list[int]
    form: list[list[int]]
    """``[[α]]`` for ``F_{q,α}``, a symmetric 2×2 ``W`` for ``F_{q,W}``"""


class PrimeModulus(BaseModel):
    prime: int
    pi_hat: int


class ComponentCertificate(BaseModel):
    indices: list[int]
    kind: Literal["single", "bipartite", "non-bipartite"]
    entry: str | None = None
    """The entry of a 1×1 component"""
    modulus: int = 1
    """N: lcm of the root orders of the component"""
    modulus2: int = 2
    """N': N doubled when odd"""
    scale: str = "1/1"
    """Global magnitude factor (non-bipartite only)"""
    core: list[list[int]] = Field(default_factory=list)
    """H as exponents of ω_N"""
    X: list[list[int]] = Field(default_factory=list)
    """Normalised core as exponents of ω_{N'}"""
    rows: SideData | None = None
    cols: SideData | None = None
    factors: list[FourierFactor] = Field(default_factory=list)
    moduli: list[PrimeModulus] = Field(default_factory=list)


class Certificate(BaseModel):
    dim: int
    generators: list[str] = Field(default_factory=list)
    """Generating set of the nonzero entries: the primes of the magnitudes"""
    components: list[ComponentCertificate]


class Verdict(BaseModel):
    tractable: bool
    certificate: Certificate | None = None
    witness: Witness | None = None

    @property
    def label(self) -> str:
        if self.tractable:
            return "TRACTABLE"
        assert self.witness is not None
        return f"P-HARD {self.witness.label}"


def dump_certificate(cert: Certificate) -> str:
    return cert.model_dump_json(indent=2) + "\n"


def save_certificate(path: str | pathlib.Path, cert: Certificate) -> pathlib.Path:
    return FileUtils.write_text(path, dump_certificate(cert))


def load_certificate(path: str | pathlib.Path) -> Certificate:
    text = FileUtils.read_text(path)
    try:
        return Certificate.model_validate_json(text)
    except ValidationError as e:
        raise InvalidCertificate(f"{path}: {e.error_count()} validation error(s)\n{e}") from e
