"""Structure of the normalised weights ``Y'``: supports must be cosets and values must be quadratic on them."""

from __future__ import annotations

import itertools
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from math import gcd

from sympy import primefactors

from ..lattice import NotACoset, PrimePart, coset_detect, coset_prime_split, project, vadd
from ..utils.log import get_logger
from .certificate import FourierFactor, GeneratorStep, PrimeModulus, PrimeSupport, SupportData, Witness
from .fourier import FourierDecomposition, check_group_condition, fourier_decompose, pairing
from .step2 import NormalizedSide

logger = get_logger(__name__)

Vector = tuple[int, ...]


def support_values(points: Sequence[Vector], Y_r: Sequence[int | None]) -> dict[Vector, int]:
    return {points[a]: e for a, e in enumerate(Y_r) if e is not None}


def extend(pivot: Sequence[int], coords: Sequence[int], local: Sequence[int]) -> Vector:
    """``pivot`` with the coordinates ``coords`` replaced by ``local``."""
    x = list(pivot)
    for i, v in zip(coords, local, strict=True):
        x[i] = v
    return tuple(x)


def local_factors(factors: Sequence[FourierFactor], coords: Sequence[int]) -> list[FourierFactor]:
    """Factors living on ``coords``, renumbered to positions inside that block."""
    where = {c: i for i, c in enumerate(coords)}
    return [
        f.model_copy(update={"coords": [where[c] for c in f.coords]}) for f in factors if f.coords[0] in where
    ]


def check_product(
    values: Mapping[Vector, int], pivot: Vector, blocks: Sequence[Sequence[int]], N2: int
) -> Vector | None:
    """First support point where ``Y'`` differs from the product of its prime-block extensions, or None."""
    for x in sorted(values):
        total = 0
        for coords in blocks:
            ext = extend(pivot, coords, project(x, coords))
            if ext not in values:
                return x
            total += values[ext]
        if total % N2 != values[x]:
            return x
    return None


def solve_generator(
    values: Mapping[Vector, int],
    pivot: Vector,
    g: Vector,
    moduli: Sequence[int],
    factors: Sequence[FourierFactor],
    N2: int,
) -> GeneratorStep | None:
    """Least shift ``b`` and forced ``α`` with ``Y(z+g) = ω^α·χ_b(z)·Y(z)`` at every support point."""
    mods = tuple(moduli)
    step_at_pivot = values[vadd(pivot, g, mods)] - values[pivot]
    for b in itertools.product(*(range(m) for m in mods)):
        alpha = (step_at_pivot - pairing(factors, b, pivot, N2)) % N2
        if all(
            values.get(vadd(z, g, mods)) == (alpha + pairing(factors, b, z, N2) + v) % N2 for z, v in values.items()
        ):
            return GeneratorStep(shift=list(b), alpha=alpha)
    return None


def coset_witness(side: str, r: int, points: Sequence[Vector], moduli: Sequence[int], generated: int) -> Witness:
    return Witness(
        stage="step3",
        condition="coset",
        details={
            "side": side,
            "r": r,
            "points": [list(x) for x in points],
            "moduli": list(moduli),
            "generated": generated,
        },
    )


def recheck_coset(details: dict) -> bool:
    points = [tuple(x) for x in details["points"]]
    return isinstance(coset_detect(points, tuple(details["moduli"])), NotACoset)


def recheck_quadratic(details: dict) -> bool:
    N2 = details["modulus"]
    values = {tuple(x): v for x, v in zip(details["points"], details["values"], strict=True)}
    if details["check"] == "product":
        blocks = details["blocks"]
        return check_product(values, tuple(details["pivot"]), blocks, N2) is not None
    if details["check"] == "alpha-order":
        order = N2 // gcd(details["alpha"], N2)
        return bool(set(primefactors(order)) - {details["prime"]})
    factors = [FourierFactor.model_validate(f) for f in details["factors"]]
    step = solve_generator(values, tuple(details["pivot"]), tuple(details["generator"]), details["moduli"], factors, N2)
    return step is None


@dataclass(frozen=True, slots=True)
class Structure:
    fourier: FourierDecomposition
    supports: dict[str, list[SupportData | None]]
    moduli: list[PrimeModulus]


def _quadratic_witness(side: str, r: int, details: dict) -> Witness:
    return Witness(stage="step3", condition="quadratic", details={"side": side, "r": r, **details})


def _difference_data(
    side: str,
    r: int,
    values: dict[Vector, int],
    pivot: Vector,
    parts: Sequence[PrimePart],
    fd: FourierDecomposition,
    N2: int,
) -> list[PrimeSupport] | Witness:
    blocks = [part.coords for part in parts]
    bad = check_product(values, pivot, blocks, N2)
    if bad is not None:
        return _quadratic_witness(
            side,
            r,
            {
                "check": "product",
                "point": list(bad),
                "points": [list(x) for x in values],
                "values": list(values.values()),
                "pivot": list(pivot),
                "blocks": [list(b) for b in blocks],
                "modulus": N2,
            },
        )
    out = []
    for part in parts:
        sub_moduli = part.coset.moduli
        local = {z: values[extend(pivot, part.coords, z)] for z in part.coset.sorted_elements()}
        piv = project(pivot, part.coords)
        factors = local_factors(fd.factors, part.coords)
        steps = []
        for g in part.coset.generators:
            step = solve_generator(local, piv, g, sub_moduli, factors, N2)
            if step is None:
                return _quadratic_witness(
                    side,
                    r,
                    {
                        "check": "difference",
                        "prime": part.prime,
                        "generator": list(g),
                        "pivot": list(piv),
                        "points": [list(z) for z in local],
                        "values": list(local.values()),
                        "moduli": list(sub_moduli),
                        "factors": [f.model_dump() for f in factors],
                        "modulus": N2,
                    },
                )
            steps.append(step)
        out.append(
            PrimeSupport(
                prime=part.prime,
                coords=list(part.coords),
                moduli=list(sub_moduli),
                pivot=list(piv),
                generators=[list(g) for g in part.coset.generators],
                orders=list(part.coset.orders),
                steps=steps,
            )
        )
    return out


def prime_moduli(
    fd: FourierDecomposition, supports: Mapping[str, Sequence[SupportData | None]], N2: int
) -> list[PrimeModulus] | Witness:
    """``π̂`` per prime: the largest factor modulus (doubled for 2), raised to cover every ``ω_{N'}^α``."""
    out = []
    for p in sorted({f.prime for f in fd.factors}):
        pi = max(f.q for f in fd.factors if f.prime == p)
        pi_hat = 2 * pi if p == 2 else pi
        for side, per_r in supports.items():
            for r, support in enumerate(per_r):
                if support is None:
                    continue
                for part in support.primes:
                    if part.prime != p:
                        continue
                    for step in part.steps:
                        order = N2 // gcd(step.alpha, N2)
                        if set(primefactors(order)) - {p}:
                            return _quadratic_witness(
                                side, r, {"check": "alpha-order", "alpha": step.alpha, "prime": p, "modulus": N2}
                            )
                        pi_hat = max(pi_hat, order)
        out.append(PrimeModulus(prime=p, pi_hat=pi_hat))
    return out


def step3_structure(
    X: Sequence[Sequence[int]], N2: int, bipartite: bool, normalized: Mapping[str, NormalizedSide]
) -> Structure | Witness:
    bad = check_group_condition(X, N2, bipartite)
    if bad is not None:
        return Witness(stage="step3", condition="group-condition", details=bad)
    fd = fourier_decompose(X, N2, bipartite)
    if isinstance(fd, dict):
        return Witness(stage="step3", condition="fourier", details=fd)
    logger.debug(f"Fourier factors: {[(f.q, f.form) for f in fd.factors]}")

    points = {"rows": fd.row_points, "cols": fd.col_points}
    cosets = {}
    for side, data in normalized.items():
        for r, Y_r in enumerate(data.Y):
            values = support_values(points[side], Y_r)
            if not values:
                continue
            found = coset_detect(values.keys(), fd.moduli)
            if isinstance(found, NotACoset):
                return coset_witness(side, r, found.points, fd.moduli, found.generated_size)
            pivot = min(x for x, e in values.items() if e == 0)
            cosets[side, r] = (values, pivot, found.rebased(pivot))

    supports: dict[str, list[SupportData | None]] = {}
    for side, data in normalized.items():
        per_r: list[SupportData | None] = []
        for r in range(len(data.Y)):
            if (side, r) not in cosets:
                per_r.append(None)
                continue
            values, pivot, phi = cosets[side, r]
            parts = coset_prime_split(phi)
            primes = _difference_data(side, r, values, pivot, parts, fd, N2)
            if isinstance(primes, Witness):
                return primes
            per_r.append(
                SupportData(
                    representative=list(phi.representative),
                    generators=[list(g) for g in phi.generators],
                    orders=list(phi.orders),
                    pivot=list(pivot),
                    primes=primes,
                )
            )
        supports[side] = per_r

    moduli = prime_moduli(fd, supports, N2)
    if isinstance(moduli, Witness):
        return moduli
    return Structure(fd, supports, moduli)
