import itertools
import random
from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, settings, strategies as st

from tests.strategies import multigraphs
from zhom.core import (
    EvalPair,
    MultiGraph,
    bipartisation,
    complete,
    complete_bipartite,
    cycle,
    edgeless,
    fourier_grid,
    graph_suite,
    hadamard,
    path,
    random_simple_graph,
    scaled,
    thicken,
    vertex_cover,
)
from zhom.corpus import CORPUS_FACTORY
from zhom.cyclotomic import CycNum, make_root
from zhom.dichotomy import decide, pairing
from zhom.dichotomy.step3 import extend, local_factors
from zhom.fasteval import build_edge_poly, build_vertex_poly, evaluator, fast_eval, rank1_closed_form
from zhom.gausssum import reduce_gauss_sum
from zhom.lattice import UniformMap
from zhom.oracle import brute_eval_A, brute_Z_back
from zhom.utils.errors import InvalidCertificate, SizeGuardExceeded

TRACTABLE_ENTRIES = [name for name in CORPUS_FACTORY.get_all() if CORPUS_FACTORY.get(name).tractable]
GRAPHS = graph_suite(2024, 100, 6, 12)


@pytest.mark.slow
@pytest.mark.parametrize("name", TRACTABLE_ENTRIES)
def test_corpus_matches_enumeration(name: str):
    A = CORPUS_FACTORY.get(name).build()
    cert = decide(A).certificate
    for G in GRAPHS:
        assert fast_eval(A, G, cert) == brute_eval_A(A, G)


@pytest.mark.parametrize("name", ["hadamard", "fourier3", "diag2", "fourier3-twisted"])
def test_scaled_corpus_matches_enumeration(name: str):
    A = scaled(CORPUS_FACTORY.get(name).build(), Fraction(3, 2))
    for G in GRAPHS[:4]:
        assert fast_eval(A, G) == brute_eval_A(A, G)


def test_examples():
    assert fast_eval(hadamard(), cycle(4)) == brute_eval_A(hadamard(), cycle(4))
    F3 = bipartisation(fourier_grid(3))
    assert fast_eval(F3, complete_bipartite(2, 3)) == brute_eval_A(F3, complete_bipartite(2, 3))
    for n in range(5):
        assert fast_eval(F3, edgeless(n)) == 6**n
    assert fast_eval(F3, cycle(3)) == 0
    assert fast_eval(F3, MultiGraph(1, ((0, 0, 1),))) == 0


def test_long_graphs():
    assert fast_eval(hadamard(), thicken(path(60), 3)) == 2**30
    assert fast_eval(hadamard(), cycle(40)) == 2**21


def test_thickened_paths_beyond_enumeration(monkeypatch):
    F3 = bipartisation(fourier_grid(3))
    cert = decide(F3).certificate
    calls: list[tuple[int, int, int]] = []
    sums: dict[int, list[tuple[int, int, int]]] = {}

    def recording(f):
        value, rounds = reduce_gauss_sum(f)
        calls.append((f.q, f.n, rounds))
        return value

    monkeypatch.setattr(evaluator, "eval_gauss_sum", recording)
    for length in (10, 20, 40):
        start = len(calls)
        assert fast_eval(F3, thicken(path(length), 2), cert) == 2 * 3 ** (length // 2)
        sums[length] = calls[start:]
        assert sums[length]
        for q, n, rounds in sums[length]:
            assert q % 2 == 1
            assert rounds <= 2 * n
    total_vars = {length: sum(n for _, n, _ in found) for length, found in sums.items()}
    total_rounds = {length: sum(r for _, _, r in found) for length, found in sums.items()}
    assert total_vars[10] > 0 and total_rounds[10] > 0
    # four times the vertices, at most 4^1.25 times the work
    assert total_vars[40] <= 4**1.25 * total_vars[10]
    assert total_rounds[40] <= 4**1.25 * total_rounds[10]
    with pytest.raises(SizeGuardExceeded):
        brute_eval_A(F3, thicken(path(20), 2))


def _odd_induced(G: MultiGraph) -> int:
    total = 0
    for bits in itertools.product((0, 1), repeat=G.vertex_count):
        total += sum(t for u, v, t in G.edges if bits[u] and bits[v]) % 2
    return total


@pytest.mark.parametrize("seed", range(50))
def test_hadamard_counts_odd_induced_subgraphs(seed: int):
    rng = random.Random(seed)
    G = random_simple_graph(rng, rng.randint(1, 7))
    value = fast_eval(hadamard(), G)
    assert value.is_rational()
    assert (2**G.vertex_count - value.rational_value()) / 2 == _odd_induced(G)


def test_rejects_hard_and_foreign_certificates():
    with pytest.raises(InvalidCertificate):
        fast_eval(vertex_cover(), complete(2))
    cert = decide(hadamard()).certificate
    with pytest.raises(InvalidCertificate):
        fast_eval(bipartisation(fourier_grid(2)), complete(2), cert)


@settings(max_examples=100)
@given(st.sampled_from(["hadamard", "h4", "fourier2", "fourier4", "fourier3-twisted"]), multigraphs(max_vertices=3))
def test_random_graphs_match_enumeration(name: str, G: MultiGraph):
    A = CORPUS_FACTORY.get(name).build()
    assert fast_eval(A, G) == brute_eval_A(A, G)


def test_rank1_closed_form():
    one = CycNum.one()
    assert rank1_closed_form([Fraction(1)], [[one]], [1, 2, 3]) == 1
    assert rank1_closed_form([Fraction(2)], [[one]], [3]) == 8
    K = [[one, one], [one, -one]]
    assert rank1_closed_form([Fraction(1), Fraction(2)], K, [1, 2]) == -5
    assert rank1_closed_form([Fraction(1)], [[one], [CycNum.zero()]], [2, 1]) == 0


@pytest.mark.parametrize("mults", [(1,), (1, 2), (2, 2, 1), (3, 1, 1)])
def test_rank1_closed_form_matches_star_sums(mults: tuple[int, ...]):
    one = CycNum.one()
    mu = [Fraction(1), Fraction(2)]
    K = [[one, one], [one, -one]]
    P = EvalPair.bipartisation_of([[one], [2 * one]], K, [[one], [one]])
    G = MultiGraph(len(mults) + 1, tuple((0, leaf + 1, m) for leaf, m in enumerate(mults)))
    expected = rank1_closed_form(mu, K, list(mults)) * rank1_closed_form([Fraction(1)], [[one], [one]], [sum(mults)])
    assert brute_Z_back(P, G, 0) == expected


def _blocks(component, side_name):
    """Every (prime part, uniform map, local factors, support pivot) of one side."""
    side = component.rows if side_name == "rows" else component.cols
    pi_hat = {m.prime: m.pi_hat for m in component.moduli}
    for r, support in enumerate(side.supports):
        if support is None:
            continue
        for part in support.primes:
            umap = UniformMap.from_generators(
                tuple(part.moduli),
                pi_hat[part.prime],
                [tuple(g) for g in part.generators],
                tuple(part.pivot),
                prod(part.orders),
            )
            yield r, part, umap, local_factors(component.factors, part.coords), tuple(support.pivot)


@pytest.mark.parametrize("name", ["hadamard", "fourier3-twisted", "fourier4", "h4"])
def test_vertex_polys_reproduce_weights(name: str):
    cert = decide(CORPUS_FACTORY.get(name).build()).certificate
    component = cert.components[0]
    N2 = component.modulus2
    sides = ["rows", "cols"] if component.cols is not None else ["rows"]
    checked = 0
    for side_name in sides:
        side = component.rows if side_name == "rows" else component.cols
        class_of = {tuple(p): a for a, p in enumerate(side.points)}
        for r, part, umap, factors, pivot in _blocks(component, side_name):
            f = build_vertex_poly(part, umap, factors, N2)
            assert f.evaluate([0] * f.n) == 0
            for x in itertools.product(range(umap.pi_hat), repeat=umap.source_dim):
                point = extend(pivot, part.coords, umap(x))
                assert make_root(umap.pi_hat, f.evaluate(x)) == make_root(N2, side.Y[r][class_of[point]])
                checked += 1
    assert checked > 0


@pytest.mark.parametrize("name", ["fourier2", "fourier3-twisted", "fourier4"])
def test_edge_polys_reproduce_core(name: str):
    cert = decide(CORPUS_FACTORY.get(name).build()).certificate
    component = cert.components[0]
    N2 = component.modulus2
    rows = list(_blocks(component, "rows"))
    cols = list(_blocks(component, "cols"))
    for (_, part, left, factors, _), (_, other, right, _, _) in itertools.product(rows, cols):
        if part.prime != other.prime:
            continue
        f = build_edge_poly(left, right, factors)
        for x in itertools.product(range(left.pi_hat), repeat=left.source_dim):
            for y in itertools.product(range(right.pi_hat), repeat=right.source_dim):
                exponent = pairing(factors, left(x), right(y), N2)
                assert make_root(left.pi_hat, f.evaluate(x + y)) == make_root(N2, exponent)
