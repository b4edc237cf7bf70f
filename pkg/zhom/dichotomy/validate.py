"""Replaying certificates and re-checking hardness witnesses with exact arithmetic."""

from __future__ import annotations

from collections.abc import Sequence
from math import lcm, prod

from ..core.entry import format_entry
from ..core.matrix import PureMatrix, bipartite_split, components
from ..gausssum.poly import prime_power
from ..lattice import Coset, element_order, generating_set, prime_blocks, project, vadd
from ..utils.errors import InvalidCertificate, ZhomError
from ..utils.log import get_logger
from .certificate import Certificate, ComponentCertificate, SideData, Witness, parse_cyc, parse_frac
from .fourier import check_group_condition, pairing, recheck_fourier, recheck_group_condition
from .pipeline import nonzero_entries
from .step1 import recheck_minor
from .step2 import (
    TwinSide,
    check_block_constant,
    check_unitary,
    d_tables,
    doubled_modulus,
    inner_product,
    norm_grouping,
    normalize_side,
    normalized_core,
    recheck_rank_one,
    recheck_root_of_unity,
)
from .step3 import check_product, extend, local_factors, recheck_coset, recheck_quadratic, support_values

logger = get_logger(__name__)


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidCertificate(message)


def _twin_side(name: str, data: SideData) -> TwinSide:
    norms = tuple(parse_frac(t) for t in data.norms)
    groups, group_of = norm_grouping(norms)
    _expect([parse_frac(t) for t in data.norm_groups] == list(groups), f"{name}: norm groups")
    count = max(data.classes, default=-1) + 1
    reps = tuple(data.classes.index(a) for a in range(count))
    return TwinSide(name, tuple(data.indices), norms, groups, group_of, tuple(data.classes), tuple(data.phases), reps)


def _replay_side(name: str, data: SideData, h0: Sequence[int], N: int, h: int) -> None:
    side = _twin_side(name, data)
    _expect(side.class_count == h, f"{name}: {side.class_count} classes for a core of size {h}")
    tables = d_tables(side, N)
    _expect(check_block_constant(tables[0]) is None, f"{name}: D^[0] is not constant on norm groups")
    K = [[parse_cyc(t) for t in row] for row in data.K]
    L = [[parse_cyc(t) for t in row] for row in data.L]
    _expect(len(K) == N and len(L) == N, f"{name}: K/L tables need {N} degree classes")
    for r, D in enumerate(tables):
        for i, row in enumerate(D):
            for a, v in enumerate(row):
                _expect(K[r][i] * L[r][a] == v, f"{name}: K⊗L differs from D at r={r}, ({i},{a})")
        _expect(all(v.is_zero() or v.norm_sq() == 1 for v in L[r]), f"{name}: L^[{r}] has entries off the unit circle")
    normalized = normalize_side(L, h0, N)
    _expect(not isinstance(normalized, dict), f"{name}: Y' has a value that is not a root of unity")
    assert not isinstance(normalized, dict)
    _expect(normalized.pivots == data.pivots, f"{name}: pivots")
    _expect(normalized.Y == data.Y, f"{name}: normalised weights")


def _replay_supports(
    name: str, data: SideData, component: ComponentCertificate, moduli: tuple[int, ...], N2: int
) -> None:
    points = [tuple(p) for p in data.points]
    _expect(len(data.supports) == N2, f"{name}: supports need {N2} degree classes")
    blocks = prime_blocks(moduli)
    for r, support in enumerate(data.supports):
        values = support_values(points, data.Y[r])
        if not values:
            _expect(support is None, f"{name}: support recorded for an empty class r={r}")
            continue
        _expect(support is not None, f"{name}: missing support for r={r}")
        assert support is not None
        pivot = tuple(support.pivot)
        _expect(values.get(pivot) == 0, f"{name}: pivot of r={r} does not carry weight 1")
        _expect(tuple(support.representative) == pivot, f"{name}: support of r={r} is not based at its pivot")
        _expect(len(support.generators) == len(support.orders), f"{name}: one order per generator at r={r}")
        for g, q in zip(support.generators, support.orders, strict=True):
            _expect(element_order(tuple(g), moduli) == q, f"{name}: generator order at r={r}")
        phi = Coset(moduli, pivot, tuple(tuple(g) for g in support.generators), tuple(support.orders))
        _expect(phi.elements == set(values), f"{name}: support of r={r} is not the recorded coset")
        _expect(prod(support.orders) == phi.size, f"{name}: generators of r={r} are not independent")
        _expect([p.prime for p in support.primes] == list(blocks), f"{name}: prime blocks at r={r}")
        _expect(check_product(values, pivot, list(blocks.values()), N2) is None, f"{name}: product law at r={r}")
        sizes = []
        for part in support.primes:
            coords = blocks[part.prime]
            sub_moduli = tuple(moduli[i] for i in coords)
            _expect(part.coords == list(coords) and part.moduli == list(sub_moduli), f"{name}: block layout r={r}")
            piv = project(pivot, coords)
            _expect(tuple(part.pivot) == piv, f"{name}: block pivot at r={r}")
            _expect(len(part.generators) == len(part.orders), f"{name}: one order per block generator at r={r}")
            for g, q in zip(part.generators, part.orders, strict=True):
                _expect(element_order(tuple(g), sub_moduli) == q, f"{name}: block generator order at r={r}")
            local_coset = Coset(sub_moduli, piv, tuple(tuple(g) for g in part.generators), tuple(part.orders))
            _expect(local_coset.elements == {project(x, coords) for x in values}, f"{name}: block coset at r={r}")
            _expect(prod(part.orders) == local_coset.size, f"{name}: block generators of r={r} are not independent")
            sizes.append(local_coset.size)
            local = {z: values[extend(pivot, coords, z)] for z in local_coset.elements}
            factors = local_factors(component.factors, coords)
            _expect(len(part.steps) == len(part.generators), f"{name}: one step per generator at r={r}")
            for g, step in zip(part.generators, part.steps, strict=True):
                for z, v in local.items():
                    lhs = local[vadd(z, tuple(g), sub_moduli)]
                    rhs = (step.alpha + pairing(factors, step.shift, z, N2) + v) % N2
                    _expect(lhs == rhs, f"{name}: difference equation at r={r}, generator {g}")
        _expect(prod(sizes) == len(values), f"{name}: prime blocks of r={r} do not multiply back")


def _replay_fourier(component: ComponentCertificate, bipartite: bool, N2: int) -> tuple[int, ...]:
    factors = component.factors
    coords = [c for f in factors for c in f.coords]
    _expect(coords == list(range(len(coords))), "Fourier factors must cover consecutive coordinates")
    moduli = tuple(f.q for f in factors for _ in f.coords)
    for f in factors:
        _expect(prime_power(f.q)[0] == f.prime and N2 % f.q == 0, f"factor modulus {f.q}")
        _expect(len(f.form) == len(f.coords) and all(len(r) == len(f.coords) for r in f.form), "factor form shape")
        _expect(all(f.form[i][j] == f.form[j][i] for i in range(len(f.coords)) for j in range(i)), "form symmetry")
    assert component.rows is not None
    h = len(component.core)
    _expect(prod(moduli) == h, f"Fourier factors of total size {prod(moduli)} for a core of size {h}")
    row_points = [tuple(p) for p in component.rows.points]
    col_points = [tuple(p) for p in component.cols.points] if bipartite and component.cols else row_points
    for pts in (row_points, col_points):
        _expect(len(set(pts)) == len(pts) == h, "class points must be distinct")
        _expect(all(len(p) == len(moduli) and all(0 <= v < m for v, m in zip(p, moduli)) for p in pts), "points")
    for a, x in enumerate(row_points):
        for b, y in enumerate(col_points):
            _expect(component.X[a][b] == pairing(factors, x, y, N2), f"Fourier reassembly at ({a},{b})")
    return moduli


def _replay_moduli(component: ComponentCertificate, sides: Sequence[SideData], N2: int) -> None:
    primes = sorted({f.prime for f in component.factors})
    _expect([m.prime for m in component.moduli] == primes, "π̂ primes")
    for m in component.moduli:
        pi = max(f.q for f in component.factors if f.prime == m.prime)
        base = 2 * pi if m.prime == 2 else pi
        _expect(prime_power(m.pi_hat)[0] == m.prime and m.pi_hat % base == 0, f"π̂ for p={m.prime}")
        for side in sides:
            for support in side.supports:
                for part in support.primes if support else []:
                    if part.prime == m.prime:
                        ok = all(s.alpha * m.pi_hat % N2 == 0 for s in part.steps)
                        _expect(ok, f"α outside ω_π̂, p={m.prime}")


def replay_component(A: PureMatrix, component: ComponentCertificate) -> None:
    """Raise ``InvalidCertificate`` at the first recorded equality that does not hold for ``A``."""
    if A.dim == 1:
        _expect(component.kind == "single" and component.entry == format_entry(A[0, 0]), "single entry")
        return
    info = bipartite_split(A)
    bipartite = info.is_bipartite
    _expect(component.kind == ("bipartite" if bipartite else "non-bipartite"), "component kind")
    N = A.root_modulus()
    N2 = doubled_modulus(N)
    _expect(component.modulus == N and component.modulus2 == N2, "root modulus")
    rows = component.rows
    _expect(rows is not None, "row data missing")
    assert rows is not None
    if bipartite:
        _expect(component.cols is not None, "column data missing")
        cols = component.cols
        assert cols is not None
        _expect(rows.indices == list(info.rows) and cols.indices == list(info.cols), "side permutation")
        _expect(parse_frac(component.scale) == 1, "bipartite scale")
    else:
        _expect(component.cols is None, "non-bipartite component with column data")
        cols = rows
        _expect(rows.indices == list(range(A.dim)), "side permutation")
    scale = parse_frac(component.scale)
    mu = [parse_frac(t) for t in rows.norms]
    nu = [parse_frac(t) for t in cols.norms]
    H = tuple(tuple(r) for r in component.core)
    for x, i in enumerate(rows.indices):
        for y, j in enumerate(cols.indices):
            e = A[i, j]
            _expect(e.magnitude == scale * mu[x] * nu[y], f"magnitude at ({i},{j})")
            expected = rows.phases[x] + cols.phases[y] + H[rows.classes[x]][cols.classes[y]]
            _expect((e.exponent_at(N) - expected) % N == 0, f"phase at ({i},{j})")
    _expect(check_unitary(H, N) is None, "core is not unitary")
    h = len(H)
    _replay_side("rows", rows, [r[0] for r in H], N, h)
    if bipartite:
        _replay_side("cols", cols, list(H[0]), N, h)
    X = normalized_core(H, N)
    _expect(tuple(tuple(r) for r in component.X) == X, "normalised core")
    _expect(check_group_condition(X, N2, bipartite) is None, "group condition")
    moduli = _replay_fourier(component, bipartite, N2)
    sides = [rows, cols] if bipartite else [rows]
    for name, side in zip(("rows", "cols"), sides):
        _replay_supports(name, side, component, moduli, N2)
    _replay_moduli(component, sides, N2)


def validate_certificate(A: PureMatrix, cert: Certificate) -> bool:
    """True iff every equality the certificate records holds for ``A``."""
    try:
        _expect(cert.dim == A.dim, f"certificate for dimension {cert.dim}, matrix has {A.dim}")
        parts = components(A)
        _expect([c.indices for c in cert.components] == [list(i) for i, _ in parts], "component partition")
        gens = generating_set(nonzero_entries(A))
        _expect(cert.generators == [format_entry(g) for g in gens.generators], "generating set")
        for (_, sub), component in zip(parts, cert.components, strict=True):
            replay_component(sub, component)
    except (ZhomError, ValueError, KeyError, IndexError, TypeError, ZeroDivisionError) as e:
        logger.info(f"certificate rejected: {e}")
        return False
    return True


def recheck_orthogonality(A: PureMatrix, details: dict) -> bool:
    u, u2 = details["pair"]
    others, block = details["others"], details["block"]
    entries = [A[x, y] for x in (u, u2) for y in others]
    if any(e.is_zero() for e in entries):
        return False
    N = lcm(1, *(e.root_order for e in entries))
    first = [A[u, y].exponent_at(N) for y in others]
    second = [A[u2, y].exponent_at(N) for y in others]
    parallel = len({(a - b) % N for a, b in zip(first, second, strict=True)}) == 1
    positions = [others.index(y) for y in block]
    return not parallel and not inner_product(first, second, positions, N).is_zero()


def recheck_witness(A: PureMatrix, witness: Witness) -> bool:
    """Re-verify the violated condition from the data the witness carries."""
    d = witness.details
    match witness.label:
        case "step1:bulatov-grohe":
            return recheck_minor(A, d)
        case "step2:orthogonality":
            return recheck_orthogonality(A, d)
        case "step2:unitary":
            return check_unitary(tuple(tuple(r) for r in d["core"]), d["modulus"]) is not None
        case "step2:block-constant":
            values = [parse_cyc(t) for t in d["values"]]
            return any(v != values[0] for v in values)
        case "step2:rank-one":
            return recheck_rank_one(d)
        case "step3:root-of-unity":
            return recheck_root_of_unity(d)
        case "step3:group-condition":
            return recheck_group_condition(d)
        case "step3:fourier":
            return recheck_fourier(d)
        case "step3:coset":
            return recheck_coset(d)
        case "step3:quadratic":
            return recheck_quadratic(d)
    raise ValueError(f"unknown witness label {witness.label}")
