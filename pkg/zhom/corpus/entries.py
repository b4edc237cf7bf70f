"""The canonical corpus: tractable matrices the fast evaluator is checked on, and one matrix per hardness stage."""

from ..core.builders import (
    bipartisation,
    coloring,
    diag,
    fourier_grid,
    h4,
    hadamard,
    kron,
    vertex_cover,
)
from ..core.entry import PureEntry
from ..core.matrix import PureMatrix
from .base import BaseCorpusEntry


class HadamardEntry(BaseCorpusEntry):
    name = "hadamard"
    description = "2x2 Hadamard matrix; Z counts induced subgraphs by edge parity"

    def build(self) -> PureMatrix:
        return hadamard()


class Hadamard2Entry(BaseCorpusEntry):
    name = "hadamard2"
    description = "H tensor H"

    def build(self) -> PureMatrix:
        return kron(hadamard(), hadamard())


class H4Entry(BaseCorpusEntry):
    name = "h4"
    description = "4x4 Hadamard matrix in Sylvester order"

    def build(self) -> PureMatrix:
        return h4()


class FourierEntry(BaseCorpusEntry):
    q: int = 0

    def build(self) -> PureMatrix:
        return bipartisation(fourier_grid(self.q))


class Fourier2Entry(FourierEntry):
    name = "fourier2"
    q = 2
    description = "bipartisation of F_2"


class Fourier3Entry(FourierEntry):
    name = "fourier3"
    q = 3
    description = "bipartisation of F_3"


class Fourier4Entry(FourierEntry):
    name = "fourier4"
    q = 4
    description = "bipartisation of F_4"


class Fourier5Entry(FourierEntry):
    name = "fourier5"
    q = 5
    description = "bipartisation of F_5"


class Diag2Entry(BaseCorpusEntry):
    name = "diag2"
    description = "diag(1, 1): two 1x1 components"

    def build(self) -> PureMatrix:
        return diag(1, 1)


class Fourier3TwistedEntry(BaseCorpusEntry):
    name = "fourier3-twisted"
    description = "bipartisation of F_3 with a quadratic twist and doubled rows, giving D^[r] = 1 + i^r"

    def build(self) -> PureMatrix:
        rows = [
            [PureEntry.root(12, 4 * (x * x + x * y) + 3 * twin) for y in range(3)]
            for twin in range(2)
            for x in range(3)
        ]
        return bipartisation(rows)


class VertexCoverEntry(BaseCorpusEntry):
    name = "vertex-cover"
    expected = "P-HARD step1:bulatov-grohe"
    description = "[[0,1],[1,1]]: counts vertex covers"

    def build(self) -> PureMatrix:
        return vertex_cover()


class Coloring3Entry(BaseCorpusEntry):
    name = "coloring3"
    expected = "P-HARD step1:bulatov-grohe"
    description = "J_3 - I_3: counts proper 3-colourings"

    def build(self) -> PureMatrix:
        return coloring(3)


class Coloring4Entry(BaseCorpusEntry):
    name = "coloring4"
    expected = "P-HARD step1:bulatov-grohe"
    description = "J_4 - I_4: counts proper 4-colourings"

    def build(self) -> PureMatrix:
        return coloring(4)


class NonOrthogonalEntry(BaseCorpusEntry):
    name = "non-orthogonal"
    expected = "P-HARD step2:orthogonality"
    description = "bipartisation of [[1,1],[1,w3]]: rows neither parallel nor orthogonal"

    def build(self) -> PureMatrix:
        w3 = PureEntry.root(3, 1)
        return bipartisation([[1, 1], [1, w3]])


class NonCosetEntry(BaseCorpusEntry):
    name = "non-coset"
    expected = "P-HARD step3:coset"
    description = "F_4 rows doubled with one sign flip; the odd-degree support {0,1,3} of Z_4 is not a coset"

    def build(self) -> PureMatrix:
        F = fourier_grid(4)
        signs = [1, 1, -1, 1]
        rows = [list(row) for row in F] + [[e.scaled(s) for e in F[x]] for x, s in enumerate(signs)]
        return bipartisation(rows)


class NonQuadraticEntry(BaseCorpusEntry):
    name = "non-quadratic"
    expected = "P-HARD step3:quadratic"
    description = "Hadamard rows twinned by w8 and w8^7; the odd-degree weights (1, w8^7) are not quadratic"

    def build(self) -> PureMatrix:
        w8 = PureEntry.root(8, 1)
        w8_7 = PureEntry.root(8, 7)
        rows = [[1, 1], [1, -1], [w8, w8], [w8_7, w8_7.scaled(-1)]]
        return bipartisation(rows)
