import itertools
from collections import Counter
from math import lcm

import pytest
from hypothesis import given, settings, strategies as st

from zhom.lattice import (
    Coset,
    NotACoset,
    basis_decomposition,
    coset_detect,
    coset_prime_split,
    element_order,
    prime_blocks,
    reassemble,
    span,
    uniform_map,
    vadd,
)


def test_element_order_and_span():
    assert element_order((2, 0), (4, 3)) == 2
    assert element_order((1, 1), (4, 3)) == 12
    assert span([(2,)], (4,)) == frozenset({(0,), (2,)})
    assert len(span([(1, 0), (0, 1)], (2, 3))) == 6


def test_basis_decomposition():
    moduli = (4, 2)
    full = [tuple(x) for x in itertools.product(range(4), range(2))]
    basis = basis_decomposition(full, moduli)
    assert basis.orders == (4, 2)
    assert basis.size == 8
    assert set(basis.coordinates()) == set(full)
    basis = basis_decomposition(list(span([(2, 1)], (4, 3))), (4, 3))
    assert basis.orders == (2, 3)


def test_coset_detect():
    found = coset_detect({(1,), (3,)}, (4,))
    assert isinstance(found, Coset)
    assert found.elements == frozenset({(1,), (3,)})
    assert found.rebased((3,)).representative == (3,)
    with pytest.raises(ValueError):
        found.rebased((0,))
    bad = coset_detect({(0,), (1,), (2,)}, (4,))
    assert isinstance(bad, NotACoset)
    assert bad.generated_size == 4
    with pytest.raises(ValueError):
        coset_detect(set(), (4,))


def test_prime_split():
    assert prime_blocks((2, 3, 4, 9, 5)) == {2: (0, 2), 3: (1, 3), 5: (4,)}
    moduli = (2, 3)
    everything = set(itertools.product(range(2), range(3)))
    phi = coset_detect(everything, moduli)
    assert isinstance(phi, Coset)
    parts = coset_prime_split(phi)
    assert [p.prime for p in parts] == [2, 3]
    assert [p.coset.size for p in parts] == [2, 3]
    assert reassemble(parts, moduli) == everything


def test_uniform_map_examples():
    phi = coset_detect({(1,), (3,)}, (4,))
    assert isinstance(phi, Coset)
    tau = uniform_map(phi, 4)
    assert tau.multiplicity == 2
    assert Counter(tau((x,)) for x in range(4)) == {(1,): 2, (3,): 2}
    point = coset_detect({(2, 1)}, (4, 2))
    assert isinstance(point, Coset)
    tau = uniform_map(point, 4)
    assert tau.source_dim == 1
    assert {tau((x,)) for x in range(4)} == {(2, 1)}
    with pytest.raises(ValueError):
        uniform_map(phi, 2)


@st.composite
def cosets(draw):
    moduli = tuple(draw(st.lists(st.sampled_from([2, 3, 4, 8, 9]), min_size=1, max_size=3)))
    point = st.tuples(*(st.integers(0, m - 1) for m in moduli))
    generators = draw(st.lists(point, max_size=3))
    return moduli, draw(point), generators


@settings(max_examples=100)
@given(cosets())
def test_coset_detection_recovers_cosets(data):
    moduli, rep, generators = data
    expected = {vadd(rep, x, moduli) for x in span(generators, moduli)}
    found = coset_detect(expected, moduli)
    assert isinstance(found, Coset)
    assert found.elements == expected
    assert found.size == len(span(found.generators, moduli))
    parts = coset_prime_split(found)
    assert reassemble(parts, moduli) == expected


@settings(max_examples=100)
@given(cosets(), st.data())
def test_uniform_map_preimages(data, draw):
    moduli, rep, generators = data
    expected = {vadd(rep, x, moduli) for x in span(generators, moduli)}
    phi = coset_detect(expected, moduli)
    assert isinstance(phi, Coset)
    pi_hat = lcm(*moduli)
    tau = uniform_map(phi, pi_hat)
    if pi_hat**tau.source_dim > 50_000:
        return
    counts = Counter(tau(x) for x in itertools.product(range(pi_hat), repeat=tau.source_dim))
    assert set(counts) == expected
    assert set(counts.values()) == {tau.multiplicity}


@settings(max_examples=100)
@given(st.sets(st.tuples(st.integers(0, 3), st.integers(0, 2)), min_size=1))
def test_coset_detection_on_arbitrary_sets(points):
    found = coset_detect(points, (4, 3))
    if isinstance(found, Coset):
        assert found.elements == points
    else:
        assert found.generated_size > len(points)
