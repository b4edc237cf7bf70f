from __future__ import annotations

from collections.abc import Sequence

from ..core.entry import PureEntry, format_entry
from ..core.matrix import PureMatrix, components
from ..lattice import generating_set
from ..utils.log import get_logger, oneline_object
from .certificate import (
    Certificate,
    ComponentCertificate,
    SideData,
    SupportData,
    Verdict,
    Witness,
    cyc_text,
    frac_text,
)
from .step1 import step1_bulatov_grohe
from .step2 import (
    NormalizedSide,
    SideShape,
    TwinSide,
    doubled_modulus,
    step2_build_CD,
    step2_check_shapes,
    step2_normalize,
)
from .step3 import step3_structure

logger = get_logger(__name__)


def _side_data(
    side: TwinSide,
    shape: SideShape,
    normalized: NormalizedSide,
    points: Sequence[tuple[int, ...]],
    supports: list[SupportData | None],
) -> SideData:
    return SideData(
        indices=list(side.indices),
        norms=[frac_text(v) for v in side.norms],
        norm_groups=[frac_text(v) for v in side.norm_groups],
        classes=list(side.classes),
        phases=list(side.phases),
        K=[[cyc_text(z) for z in row] for row in shape.K],
        L=[[cyc_text(z) for z in row] for row in shape.L],
        pivots=list(normalized.pivots),
        Y=[list(row) for row in normalized.Y],
        points=[list(p) for p in points],
        supports=supports,
    )


def decide_component(A: PureMatrix, indices: Sequence[int]) -> ComponentCertificate | Witness:
    """Run every stage on one connected component; the first violated condition wins."""
    if A.dim == 1:
        return ComponentCertificate(indices=list(indices), kind="single", entry=format_entry(A[0, 0]))
    purified = step1_bulatov_grohe(A, indices)
    if isinstance(purified, Witness):
        return purified
    reduced = step2_build_CD(purified, indices)
    if isinstance(reduced, Witness):
        return reduced
    shapes = step2_check_shapes(reduced)
    if isinstance(shapes, Witness):
        return shapes
    normalized = step2_normalize(reduced, shapes)
    if isinstance(normalized, Witness):
        return normalized
    X, sides = normalized
    N2 = doubled_modulus(reduced.modulus)
    structure = step3_structure(X, N2, purified.bipartite, sides)
    if isinstance(structure, Witness):
        return structure

    fd = structure.fourier
    rows = _side_data(reduced.rows, shapes["rows"], sides["rows"], fd.row_points, structure.supports["rows"])
    cols = None
    if purified.bipartite:
        cols = _side_data(reduced.cols, shapes["cols"], sides["cols"], fd.col_points, structure.supports["cols"])
    return ComponentCertificate(
        indices=list(indices),
        kind="bipartite" if purified.bipartite else "non-bipartite",
        modulus=reduced.modulus,
        modulus2=N2,
        scale=frac_text(purified.scale),
        core=[list(r) for r in reduced.core],
        X=[list(r) for r in X],
        rows=rows,
        cols=cols,
        factors=list(fd.factors),
        moduli=structure.moduli,
    )


def nonzero_entries(A: PureMatrix) -> list[PureEntry]:
    return [A[i, j] for i in range(A.dim) for j in range(i, A.dim) if not A[i, j].is_zero()]


def decide(A: PureMatrix) -> Verdict:
    """Tractable with a certificate, or P-hard with the first violated condition, component by component."""
    gens = generating_set(nonzero_entries(A))
    certified = []
    for indices, sub in components(A):
        result = decide_component(sub, indices)
        if isinstance(result, Witness):
            witness = result.model_copy(update={"component": list(indices)})
            logger.info(f"component {list(indices)}: P-HARD {witness.label}")
            logger.debug(f"witness: {oneline_object(witness.details, limit=400)}")
            return Verdict(tractable=False, witness=witness)
        logger.info(f"component {list(indices)}: tractable ({result.kind})")
        certified.append(result)
    cert = Certificate(dim=A.dim, generators=[format_entry(g) for g in gens.generators], components=certified)
    return Verdict(tractable=True, certificate=cert)
