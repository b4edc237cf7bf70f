import pytest
from hypothesis import given, settings, strategies as st

from tests.strategies import quad_polys
from zhom.cyclotomic import CycNum, certified_sign_real, make_root
from zhom.gausssum import (
    AffineForm,
    PolyBuilder,
    QuadPoly,
    detect_zero_case,
    eval_gauss_sum,
    one_var_sum,
    prime_power,
    reduce_gauss_sum,
    two_var_sum,
)
from zhom.oracle import brute_gauss
from zhom.utils.errors import NotPrimePower

# q -> variable count that keeps enumeration small
MODULI = {2: 5, 3: 4, 4: 4, 5: 4, 7: 3, 8: 3, 9: 3, 16: 3, 25: 2, 27: 2}


def test_prime_power():
    assert prime_power(2) == (2, 1)
    assert prime_power(27) == (3, 3)
    assert prime_power(16) == (2, 4)
    for q in (1, 6, 12, 100):
        with pytest.raises(NotPrimePower):
            prime_power(q)
    with pytest.raises(NotPrimePower):
        QuadPoly.build(6, 1)


def test_quintic_gauss_sum():
    w = make_root(5, 1)
    g = eval_gauss_sum(QuadPoly.build(5, 1, {(0, 0): 1}))
    assert g == 1 + 2 * w + 2 * w**4
    assert g == one_var_sum(5, 1, 0)
    assert g * g == 5
    assert certified_sign_real(g) == 1


def test_power_of_two_examples():
    assert eval_gauss_sum(QuadPoly.build(4, 1, {(0, 0): 1})) == 2 + 2 * make_root(4, 1)
    assert eval_gauss_sum(QuadPoly.build(8, 1, {(0, 0): 1})) == 4 * make_root(8, 1)
    assert eval_gauss_sum(QuadPoly.build(2, 2, {(0, 1): 1})) == 2
    assert eval_gauss_sum(QuadPoly.build(2, 1, {(0, 0): 1})) == 0


def test_affine_and_empty_sums():
    assert eval_gauss_sum(QuadPoly.zero(7, 0)) == 1
    assert eval_gauss_sum(QuadPoly.zero(3, 2)) == 9
    assert eval_gauss_sum(QuadPoly.build(9, 2, lin={1: 3})) == 0
    assert eval_gauss_sum(QuadPoly.build(5, 0, const=2)) == make_root(5, 2)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_squared_gauss_sum_sign(p: int):
    legendre_minus_one = 1 if p % 4 == 1 else -1
    for a in range(1, p):
        g = eval_gauss_sum(QuadPoly.build(p, 1, {(0, 0): a}))
        assert g * g == legendre_minus_one * p


def test_one_and_two_var_sums():
    for q in (2, 3, 4, 5, 8, 9):
        assert one_var_sum(q, 0, 0) == q
        assert one_var_sum(q, 0, 1) == 0
        assert two_var_sum(q, 0, 1, 0) == q
        for a in range(q):
            f = QuadPoly.build(q, 2, {(0, 0): a, (0, 1): 1, (1, 1): 1})
            assert two_var_sum(q, a, 1, 1) == eval_gauss_sum(f)


def test_detect_zero_case():
    assert detect_zero_case(QuadPoly.build(4, 1, lin={0: 1}), 0)
    assert detect_zero_case(QuadPoly.build(2, 1, {(0, 0): 1}), 0)
    assert detect_zero_case(QuadPoly.build(4, 2, {(0, 1): 2, (1, 1): 1}, {0: 3}), 0)
    assert not detect_zero_case(QuadPoly.build(4, 2, {(0, 1): 1}, {0: 1}), 0)
    assert not detect_zero_case(QuadPoly.build(4, 1, {(0, 0): 1}), 0)
    assert not detect_zero_case(QuadPoly.build(3, 1, lin={0: 1}), 0)
    assert eval_gauss_sum(QuadPoly.build(4, 2, {(0, 1): 2, (1, 1): 1}, {0: 3})) == 0


def test_poly_builder_products():
    builder = PolyBuilder(5, 2)
    builder.add_product(AffineForm({0: 1}, 1), AffineForm({1: 2}, 3))
    f = builder.build()
    for x in ((0, 0), (1, 2), (4, 3)):
        assert f.evaluate(x) == ((x[0] + 1) * (2 * x[1] + 3)) % 5
    assert eval_gauss_sum(f) == brute_gauss(5, f)


@pytest.mark.parametrize("q", sorted(MODULI))
def test_matches_enumeration(q: int):
    @settings(max_examples=200)
    @given(quad_polys(q, max_vars=MODULI[q]))
    def check(f: QuadPoly):
        assert eval_gauss_sum(f) == brute_gauss(q, f)

    check()


@settings(max_examples=100)
@given(st.sampled_from(sorted(MODULI)).flatmap(lambda q: quad_polys(q, max_vars=min(3, MODULI[q]))), st.data())
def test_sum_laws(f: QuadPoly, data: st.DataObject):
    z = eval_gauss_sum(f)
    assert eval_gauss_sum(f.with_unused()) == z * f.q
    c = data.draw(st.integers(0, f.q - 1))
    assert eval_gauss_sum(f.shifted(c)) == z * make_root(f.q, c)
    perm = data.draw(st.permutations(range(f.n)))
    assert eval_gauss_sum(f.relabeled(list(perm))) == z


@settings(max_examples=200)
@given(st.sampled_from([3, 5, 9, 25, 27, 49]).flatmap(lambda q: quad_polys(q, max_vars=8)))
def test_odd_reduction_rounds_are_linear(f: QuadPoly):
    value, rounds = reduce_gauss_sum(f)
    assert value == eval_gauss_sum(f)
    assert rounds <= 2 * f.n


@settings(max_examples=100)
@given(quad_polys(8, max_vars=3))
def test_zero_case_implies_zero(f: QuadPoly):
    if any(detect_zero_case(f, t) for t in range(f.n)):
        assert eval_gauss_sum(f) == CycNum.zero()
