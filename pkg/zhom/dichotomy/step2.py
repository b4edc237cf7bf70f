"""Pure-part stage: twin classes, the core H, the degree tables D^{[r]}, their shape and the normalisation.

Exponents are kept as integers modulo ``N`` (the component's root modulus) while building the core and modulo
``N' = lcm(2, N)`` after normalisation.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, replace
from fractions import Fraction

from ..cyclotomic import CycNum, make_root
from ..utils.errors import InternalInconsistency
from ..utils.log import get_logger
from .certificate import Witness, cyc_text, parse_cyc
from .step1 import Purified

logger = get_logger(__name__)

ExpRows = tuple[tuple[int, ...], ...]
Table = list[list[CycNum]]


@dataclass(frozen=True, slots=True)
class TwinSide:
    """One side of the component grouped by norm and by twin class."""

    name: str
    indices: tuple[int, ...]
    norms: tuple[Fraction, ...]
    norm_groups: tuple[Fraction, ...]
    group_of: tuple[int, ...]
    classes: tuple[int, ...]
    phases: tuple[int, ...]
    reps: tuple[int, ...]
    """Position of the representative of every class (phase 0)"""

    @property
    def class_count(self) -> int:
        return len(self.reps)


@dataclass(frozen=True, slots=True)
class TwinReduced:
    purified: Purified
    rows: TwinSide
    cols: TwinSide
    core: ExpRows
    """H: exponent of the representatives' entry, one row per row class"""

    @property
    def modulus(self) -> int:
        return self.purified.modulus


def norm_grouping(norms: Sequence[Fraction]) -> tuple[tuple[Fraction, ...], tuple[int, ...]]:
    groups = tuple(sorted(set(norms), reverse=True))
    where = {v: i for i, v in enumerate(groups)}
    return groups, tuple(where[v] for v in norms)


def twin_classes(E: ExpRows, N: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Group rows that agree up to a constant exponent shift. Returns ``(classes, phases, reps)``."""
    classes: list[int] = []
    phases: list[int] = []
    reps: list[int] = []
    for x, row in enumerate(E):
        for a, rep in enumerate(reps):
            shifts = {(v - w) % N for v, w in zip(row, E[rep], strict=True)}
            if len(shifts) == 1:
                classes.append(a)
                phases.append(shifts.pop())
                break
        else:
            classes.append(len(reps))
            phases.append(0)
            reps.append(x)
    return tuple(classes), tuple(phases), tuple(reps)


def inner_product(u: Sequence[int], v: Sequence[int], positions: Sequence[int], N: int) -> CycNum:
    """``Σ_{y ∈ positions} ω_N^{u_y} · conj(ω_N^{v_y})``."""
    return CycNum.from_exponent_counts(N, Counter((u[y] - v[y]) % N for y in positions))


def find_non_orthogonal(
    E: ExpRows, reps: Sequence[int], blocks: Sequence[Sequence[int]], N: int
) -> tuple[int, int, Sequence[int]] | None:
    """First pair of class representatives with a nonzero inner product on some block, or None."""
    for i, x in enumerate(reps):
        for x2 in reps[i + 1 :]:
            for block in blocks:
                if not inner_product(E[x], E[x2], block, N).is_zero():
                    return x, x2, block
    return None


def _blocks(group_of: Sequence[int]) -> list[list[int]]:
    out: dict[int, list[int]] = {}
    for y, g in enumerate(group_of):
        out.setdefault(g, []).append(y)
    return [out[g] for g in sorted(out)]


def _transpose(E: ExpRows) -> ExpRows:
    return tuple(zip(*E, strict=True)) if E else ()


def step2_build_CD(purified: Purified, indices: Sequence[int]) -> TwinReduced | Witness:
    """Twin reduction of the pure part, with the blockwise orthogonality check for non-parallel rows and columns."""
    P = purified
    N = P.modulus
    row_groups, row_group_of = norm_grouping(P.row_norms)
    col_groups, col_group_of = norm_grouping(P.col_norms)
    sides = [("rows", P.exponents, row_group_of, col_group_of, P.rows, P.cols)]
    if P.bipartite:
        sides.append(("cols", _transpose(P.exponents), col_group_of, row_group_of, P.cols, P.rows))
    twins = {}
    for name, E, _, other_groups, mine, others in sides:
        classes, phases, reps = twin_classes(E, N)
        bad = find_non_orthogonal(E, reps, _blocks(other_groups), N)
        if bad is not None:
            x, x2, block = bad
            logger.debug(f"{name} {mine[x]} and {mine[x2]} are neither parallel nor orthogonal")
            return Witness(
                stage="step2",
                condition="orthogonality",
                details={
                    "pair": [indices[mine[x]], indices[mine[x2]]],
                    "others": [indices[y] for y in others],
                    "block": [indices[others[y]] for y in block],
                },
            )
        twins[name] = (classes, phases, reps)

    def side(name: str, idx, norms, groups, group_of) -> TwinSide:
        classes, phases, reps = twins[name]
        return TwinSide(name, idx, norms, groups, group_of, classes, phases, reps)

    rows = side("rows", P.rows, P.row_norms, row_groups, row_group_of)
    if P.bipartite:
        cols = side("cols", P.cols, P.col_norms, col_groups, col_group_of)
    else:
        cols = replace(rows, name="cols")
    core = tuple(tuple(P.exponents[x][y] for y in cols.reps) for x in rows.reps)
    for x, row in enumerate(P.exponents):
        for y, e in enumerate(row):
            expected = rows.phases[x] + cols.phases[y] + core[rows.classes[x]][cols.classes[y]]
            if (e - expected) % N:
                raise InternalInconsistency(f"twin decomposition does not reproduce entry ({x},{y})")
    logger.debug(f"twin reduction: {rows.class_count}x{cols.class_count} core at N={N}")
    return TwinReduced(P, rows, cols, core)


def d_tables(side: TwinSide, N: int) -> list[Table]:
    """``D^{[r]}_{(i,a)} = Σ_{x in group i, class a} ω_N^{k_x·r}`` for r in [0, N)."""
    out = []
    for r in range(N):
        counts: list[list[Counter[int]]] = [[Counter() for _ in side.reps] for _ in side.norm_groups]
        for g, a, k in zip(side.group_of, side.classes, side.phases, strict=True):
            counts[g][a][(k * r) % N] += 1
        out.append([[CycNum.from_exponent_counts(N, c) for c in row] for row in counts])
    return out


def table_text(D: Table) -> list[list[str]]:
    return [[cyc_text(z) for z in row] for row in D]


# ---------------------------------------------------------------- shapes
def check_unitary(H: ExpRows, N: int) -> dict | None:
    """Pairwise orthogonality of the rows and of the columns of ``ω_N^H``; violation details or None."""
    if any(len(row) != len(H) for row in H):
        return {"core": [list(r) for r in H], "modulus": N, "axis": "shape", "pair": []}
    everything = list(range(len(H)))
    for axis, E in (("rows", H), ("cols", _transpose(H))):
        for a in range(len(E)):
            for b in range(a + 1, len(E)):
                if not inner_product(E[a], E[b], everything, N).is_zero():
                    return {"core": [list(r) for r in H], "modulus": N, "axis": axis, "pair": [a, b]}
    return None


def check_block_constant(D0: Table) -> int | None:
    """First norm group whose ``D^{[0]}`` entries differ across classes, or None."""
    for i, row in enumerate(D0):
        if any(v != row[0] for v in row):
            return i
    return None


def split_rank_one(D: Table) -> tuple[list[CycNum], list[CycNum]] | str:
    """``D = K ⊗ L`` with ``L`` equal to 1 at the first nonzero column of the first nonzero row.

    Returns the reason (``rank`` or ``norm``) when ``D`` has rank above one or unequal norms on that row.
    """
    width = len(D[0]) if D else 0
    pivot = next(((i, b) for i, row in enumerate(D) for b, v in enumerate(row) if not v.is_zero()), None)
    if pivot is None:
        return [CycNum.zero() for _ in D], [CycNum.zero() for _ in range(width)]
    i0, b = pivot
    for i, row in enumerate(D):
        for a, v in enumerate(row):
            if v * D[i0][b] != row[b] * D[i0][a]:
                return "rank"
    norm = D[i0][b].norm_sq()
    if any(not v.is_zero() and v.norm_sq() != norm for v in D[i0]):
        return "norm"
    lead = D[i0][b]
    return [row[b] for row in D], [v / lead for v in D[i0]]


@dataclass(frozen=True, slots=True)
class SideShape:
    K: list[list[CycNum]]
    """``K[r][i]`` for r in [0, N)"""
    L: list[list[CycNum]]
    """``L[r][a]`` for r in [0, N)"""


def step2_check_shapes(reduced: TwinReduced) -> dict[str, SideShape] | Witness:
    N = reduced.modulus
    bad = check_unitary(reduced.core, N)
    if bad is not None:
        return Witness(stage="step2", condition="unitary", details=bad)
    shapes = {}
    for side in _sides(reduced):
        tables = d_tables(side, N)
        group = check_block_constant(tables[0])
        if group is not None:
            return Witness(
                stage="step2",
                condition="block-constant",
                details={"side": side.name, "group": group, "values": [cyc_text(v) for v in tables[0][group]]},
            )
        Ks, Ls = [], []
        for r, D in enumerate(tables):
            split = split_rank_one(D)
            if isinstance(split, str):
                return Witness(
                    stage="step2",
                    condition="rank-one",
                    details={"side": side.name, "r": r, "reason": split, "table": table_text(D)},
                )
            Ks.append(split[0])
            Ls.append(split[1])
        shapes[side.name] = SideShape(Ks, Ls)
    logger.debug(f"shapes hold for {', '.join(shapes)}")
    return shapes


def _sides(reduced: TwinReduced) -> list[TwinSide]:
    return [reduced.rows, reduced.cols] if reduced.purified.bipartite else [reduced.rows]


def recheck_rank_one(details: dict) -> bool:
    table = [[parse_cyc(t) for t in row] for row in details["table"]]
    return isinstance(split_rank_one(table), str)


# ---------------------------------------------------------------- normalisation
def doubled_modulus(N: int) -> int:
    return N if N % 2 == 0 else 2 * N


@dataclass(frozen=True, slots=True)
class NormalizedSide:
    pivots: list[int | None]
    """Per r in [0, N')"""
    Y: list[list[int | None]]
    """``Y'^{[r]}_a`` as exponents of ω_{N'}"""


def normalized_core(H: ExpRows, N: int) -> ExpRows:
    """``X_{ab} = H_{ab} − H_{a0} − H_{0b} + H_{00}``, rescaled to ω_{N'}."""
    N2 = doubled_modulus(N)
    up = N2 // N
    return tuple(
        tuple(((h - row[0] - H[0][b] + H[0][0]) * up) % N2 for b, h in enumerate(row)) for row in H
    )


def normalize_side(L: Sequence[Sequence[CycNum]], h0: Sequence[int], N: int) -> NormalizedSide | dict:
    """Divide each ``Y^{[r]} = L^{[r]} · ω_N^{h0·r}`` by its value at the pivot class.

    ``h0`` is the first column of H for the row side and the first row for the column side. Returns the
    offending entry as a dict when a nonzero ``Y'`` value is not a power of ``ω_{N'}``.
    """
    N2 = doubled_modulus(N)
    pivots: list[int | None] = []
    Y: list[list[int | None]] = []
    for r in range(N2):
        Lr = L[r % N]
        if all(v.is_zero() for v in Lr):
            pivots.append(None)
            Y.append([None] * len(Lr))
            continue
        piv = next((a for a, v in enumerate(Lr) if v == 1), None)
        if piv is None:
            raise InternalInconsistency(f"no class with L = 1 at r = {r}")
        row: list[int | None] = []
        for a, v in enumerate(Lr):
            if v.is_zero():
                row.append(None)
                continue
            value = v * make_root(N, (h0[a] - h0[piv]) * r)
            e = value.exponent_in(N2)
            if e is None:
                return {"r": r, "class": a, "value": cyc_text(value), "modulus": N2}
            row.append(e)
        pivots.append(piv)
        Y.append(row)
    return NormalizedSide(pivots, Y)


def step2_normalize(
    reduced: TwinReduced, shapes: dict[str, SideShape]
) -> tuple[ExpRows, dict[str, NormalizedSide]] | Witness:
    H, N = reduced.core, reduced.modulus
    X = normalized_core(H, N)
    out = {}
    for side in _sides(reduced):
        h0 = [row[0] for row in H] if side.name == "rows" else list(H[0])
        normalized = normalize_side(shapes[side.name].L, h0, N)
        if isinstance(normalized, dict):
            return Witness(stage="step3", condition="root-of-unity", details={"side": side.name, **normalized})
        out[side.name] = normalized
    return X, out


def recheck_root_of_unity(details: dict) -> bool:
    return parse_cyc(details["value"]).exponent_in(details["modulus"]) is None
