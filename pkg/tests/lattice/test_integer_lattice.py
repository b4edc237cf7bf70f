from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix

from zhom.core import PureEntry
from zhom.lattice import IntLattice, echelon, generating_set, left_kernel, quotient_basis, relation_lattice, saturate
from zhom.utils.errors import ZeroValue


def test_relation_lattice():
    L = relation_lattice([2, 4, Fraction(1, 2)])
    assert L.rank == 2
    assert L.contains((1, 0, 1))
    assert L.contains((2, -1, 0))
    assert not L.contains((1, 0, 0))
    assert relation_lattice([1, -1]).rank == 2
    assert relation_lattice([2, 3]).rank == 0
    assert relation_lattice([PureEntry.root(4, 1, 3), 9]).contains((2, -1))
    with pytest.raises(ZeroValue):
        relation_lattice([0, 2])


def test_saturate():
    L = saturate(IntLattice.of(2, [(2, 0)]))
    assert L.contains((1, 0))
    assert not L.contains((0, 1))
    L = saturate(IntLattice.of(3, [(2, 4, 0), (0, 0, 3)]))
    assert L.contains((1, 2, 0))
    assert L.contains((0, 0, 1))
    assert saturate(IntLattice.of(2, [(3, 0), (0, 5)])) == IntLattice.full(2)
    assert saturate(IntLattice.of(2, [])).rank == 0


@given(st.integers(-60, 60), st.integers(-60, 60))
def test_echelon_column_reduces_to_gcd(a: int, b: int):
    H, U = echelon([[a, 1], [b, 0]])
    assert H[0][0] == gcd(a, b)
    assert H[1][0] == 0
    assert Matrix(U) * Matrix([[a, 1], [b, 0]]) == Matrix(H)
    assert abs(Matrix(U).det()) == 1


def test_quotient_basis_is_unimodular():
    Lp = saturate(IntLattice.of(3, [(2, 4, 6)]))
    rest = quotient_basis(Lp)
    assert len(rest) == 2
    assert abs(Matrix([list(r) for r in Lp.basis] + [list(r) for r in rest]).det()) == 1
    assert quotient_basis(IntLattice.of(2, [])) == [(1, 0), (0, 1)]
    with pytest.raises(ValueError):
        quotient_basis(IntLattice.of(2, [(2, 0)]))


def test_generating_set():
    w3 = PureEntry.root(3, 1)
    gs = generating_set([PureEntry.of(2), w3.scaled(6), PureEntry.of(Fraction(1, 3))])
    assert gs.generators == (PureEntry.of(2), PureEntry.of(3))
    assert gs.exponents == ((1, 0), (1, 1), (0, -1))
    assert gs.roots == (PureEntry.of(1), w3, PureEntry.of(1))
    with pytest.raises(ZeroValue):
        generating_set([PureEntry.of(0)])


small_rows = st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), max_size=4)


@settings(max_examples=100)
@given(small_rows)
def test_echelon_and_kernel(rows: list[list[int]]):
    H, U = echelon(rows, 3)
    if U:
        assert abs(Matrix(U).det()) == 1
    for i, row in enumerate(H):
        assert row == [sum(U[i][k] * rows[k][j] for k in range(len(rows))) for j in range(3)]
    for x in left_kernel(rows, len(rows), 3):
        assert all(sum(x[k] * rows[k][j] for k in range(len(rows))) == 0 for j in range(3))
    L = IntLattice.of(3, rows)
    for row in rows:
        assert L.contains(row)
    S = saturate(L)
    assert S.rank == L.rank
    for b in L.basis:
        assert S.contains(b)
