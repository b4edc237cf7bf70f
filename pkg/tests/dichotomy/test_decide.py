import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix

from zhom.core import (
    PureEntry,
    PureMatrix,
    bipartisation,
    coloring,
    diag,
    fourier_grid,
    hadamard,
    permuted,
    random_permutation,
    scaled,
    vertex_cover,
)
from zhom.corpus import CORPUS_FACTORY, TRACTABLE
from zhom.dichotomy import decide, recheck_witness

ENTRIES = CORPUS_FACTORY.get_all()


def test_decide_examples():
    assert decide(hadamard()).label == TRACTABLE
    assert decide(vertex_cover()).label == "P-HARD step1:bulatov-grohe"
    assert decide(coloring(3)).label == "P-HARD step1:bulatov-grohe"
    verdict = decide(diag(1, 1))
    assert verdict.tractable
    assert verdict.certificate is not None
    assert [c.kind for c in verdict.certificate.components] == ["single", "single"]
    verdict = decide(bipartisation(fourier_grid(3)))
    assert verdict.tractable
    assert verdict.certificate.components[0].kind == "bipartite"


def test_decide_records_component():
    A = PureMatrix.from_rows([[1, 0, 0], [0, 0, 1], [0, 1, 1]])
    verdict = decide(A)
    assert not verdict.tractable
    assert verdict.witness.component == [1, 2]
    assert recheck_witness(A, verdict.witness)


def test_generators_are_magnitude_primes():
    A = PureMatrix.from_rows([[2, 6], [6, 18]])
    verdict = decide(A)
    assert verdict.tractable
    assert verdict.certificate.generators == ["2/1", "3/1"]


@pytest.mark.parametrize("name", ENTRIES)
def test_corpus_verdicts(name: str):
    entry = CORPUS_FACTORY.get(name)
    A = entry.build()
    verdict = decide(A)
    assert verdict.label == entry.expected
    if not verdict.tractable:
        assert recheck_witness(A, verdict.witness)


@pytest.mark.parametrize("name", ENTRIES)
@pytest.mark.parametrize("seed", range(3))
def test_permutation_invariance(name: str, seed: int):
    A = CORPUS_FACTORY.get(name).build()
    perm = random_permutation(random.Random(seed), A.dim)
    assert decide(permuted(A, perm)).tractable == decide(A).tractable


@pytest.mark.parametrize("name", ENTRIES)
@pytest.mark.parametrize("c", [Fraction(3, 2), Fraction(5), Fraction(1, 7)])
def test_scale_invariance(name: str, c: Fraction):
    A = CORPUS_FACTORY.get(name).build()
    assert decide(scaled(A, c)).label == decide(A).label


def _rank_one(rows: list[list[Fraction]]) -> bool:
    return Matrix(rows).rank() <= 1


def bulatov_grohe(A: PureMatrix) -> bool:
    """Every component of a nonnegative matrix has (block) rank at most one."""
    mags = A.magnitudes()
    for part in nx.connected_components(A.nonzero_graph()):
        idx = sorted(part)
        sub = A.nonzero_graph().subgraph(idx)
        if nx.number_of_selfloops(sub) == 0 and nx.is_bipartite(sub) and len(idx) > 1:
            color = nx.bipartite.color(sub)
            left = [i for i in idx if color[i] == 0]
            right = [i for i in idx if color[i] == 1]
            block = [[mags[i][j] for j in right] for i in left]
        else:
            block = [[mags[i][j] for j in idx] for i in idx]
        if not _rank_one(block):
            return False
    return True


@st.composite
def nonnegative_matrices(draw) -> PureMatrix:
    m = draw(st.integers(1, 4))
    value = st.sampled_from([Fraction(0), Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3)])
    rows = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            rows[i][j] = rows[j][i] = draw(value)
    if draw(st.booleans()):
        u = [draw(st.sampled_from([Fraction(1), Fraction(2), Fraction(1, 3)])) for _ in range(m)]
        rows = [[u[i] * u[j] for j in range(m)] for i in range(m)]
    return PureMatrix.from_rows(rows)


@settings(max_examples=100)
@given(nonnegative_matrices())
def test_agrees_with_bulatov_grohe(A: PureMatrix):
    verdict = decide(A)
    assert verdict.tractable == bulatov_grohe(A)
    if not verdict.tractable:
        assert verdict.witness.label == "step1:bulatov-grohe"
        assert recheck_witness(A, verdict.witness)


@settings(max_examples=100)
@given(st.integers(1, 3), st.sampled_from([1, 2, 3, 4]), st.integers(1, 3))
def test_rank_one_phases_are_tractable(m: int, order: int, seed: int):
    rng = random.Random(seed)
    u = [PureEntry.root(order, rng.randrange(order), rng.choice([1, 2])) for _ in range(m)]
    A = PureMatrix.from_rows([[u[i] * u[j] for j in range(m)] for i in range(m)])
    assert decide(A).tractable
