from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tests.strategies import pure_entries, pure_matrices
from zhom.core import (
    PureEntry,
    PureMatrix,
    as_grid,
    bipartisation,
    bipartite_split,
    components,
    diag,
    format_entry,
    hadamard,
    parse_entry,
    random_permutation,
)
from zhom.core.permutation import Permutation
from zhom.utils.errors import NotSymmetric, ParseError


def test_entry_canonical_form():
    assert PureEntry(Fraction(-1)) == PureEntry.root(2, 1)
    assert PureEntry.root(8, 4) == PureEntry.root(2, 1)
    assert PureEntry.root(6, 6) == PureEntry(Fraction(1))
    zero = PureEntry.root(5, 3, 0)
    assert (zero.root_order, zero.root_exp) == (1, 0)
    assert PureEntry.root(4, 1) ** 4 == PureEntry(Fraction(1))
    assert PureEntry(Fraction(0)) ** 0 == PureEntry(Fraction(1))


@pytest.mark.parametrize(
    "token, expected",
    [
        ("3/2*w(8,5)", PureEntry(Fraction(3, 2), 8, 5)),
        ("0", PureEntry(Fraction(0), 1, 0)),
        ("-4", PureEntry(Fraction(4), 2, 1)),
        ("w(3,2)", PureEntry(Fraction(1), 3, 2)),
        ("7/3", PureEntry(Fraction(7, 3))),
    ],
)
def test_parse_entry(token: str, expected: PureEntry):
    assert parse_entry(token) == expected


@pytest.mark.parametrize("token", ["", "3/0", "2w(4,1)", "*w(4,1)", "w(0,1)", "x"])
def test_parse_entry_rejects(token: str):
    with pytest.raises(ParseError):
        parse_entry(token)


@settings(max_examples=100)
@given(pure_entries())
def test_entry_text_form(e: PureEntry):
    assert parse_entry(format_entry(e)) == e
    assert PureEntry.from_cycnum(e.to_cycnum()) == e


def test_matrix_symmetry_is_enforced():
    with pytest.raises(NotSymmetric):
        PureMatrix.from_rows([[1, 2], [3, 1]])
    with pytest.raises(ValueError):
        PureMatrix.from_rows([[1, 2]])


def test_components():
    parts = components(diag(1, 1))
    assert [idx for idx, _ in parts] == [(0,), (1,)]
    assert len(components(hadamard())) == 1
    A = PureMatrix.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 2]])
    parts = components(A)
    assert [idx for idx, _ in parts] == [(0, 1), (2,)]
    assert parts[1][1] == PureMatrix.from_rows([[2]])


def test_bipartite_split():
    info = bipartite_split(PureMatrix.from_rows([[0, 1], [1, 0]]))
    assert info.is_bipartite
    assert info.block == as_grid([[1]])
    assert not bipartite_split(hadamard()).is_bipartite
    B = [[1, 2, PureEntry.root(3, 1)], [1, -1, 5]]
    info = bipartite_split(bipartisation(B))
    assert info.is_bipartite
    assert (info.rows, info.cols) == ((0, 1), (2, 3, 4))
    assert info.block == as_grid(B)


@settings(max_examples=100)
@given(pure_matrices(max_dim=4), st.randoms(use_true_random=False))
def test_components_partition(A: PureMatrix, rng):
    parts = components(A)
    indices = sorted(i for idx, _ in parts for i in idx)
    assert indices == list(range(A.dim))
    for idx, sub in parts:
        for other, _ in parts:
            if other != idx:
                assert all(A[i, j].is_zero() for i in idx for j in other)
        assert sub == A.submatrix(idx)
    perm = random_permutation(rng, A.dim)
    assert sorted(len(idx) for idx, _ in components(A.permuted(perm))) == sorted(len(idx) for idx, _ in parts)


def test_permutation():
    perm = Permutation.of([2, 0, 1])
    assert perm.compose(perm.inverse()).is_identity()
    with pytest.raises(ValueError):
        Permutation.of([0, 0, 1])
