import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from netindex.factored import FactoredInteger
from netindex.generators import FAMILIES, gen_chain_silicate, gen_honeycomb, gen_oxide, gen_silicate, generate
from netindex.graph import build_graph
from netindex.indices import (
    UndefinedIndexError,
    compute_index,
    first_zagreb,
    mult_zagreb_1,
    mult_zagreb_1_log10,
    mult_zagreb_1_star,
    mult_zagreb_2,
    mult_zagreb_2_vertex_form,
    narumi_katayama,
    second_zagreb,
    sum_connectivity,
)
from netindex.verify import random_connected_graph

K4 = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
C6 = gen_honeycomb(1).graph
SL1 = gen_silicate(1).graph
CS1 = gen_chain_silicate(1).graph


def F(d):
    return FactoredInteger(d)


def test_zagreb():
    assert first_zagreb(K4) == 36
    assert first_zagreb(C6) == 24
    assert first_zagreb(SL1) == 12 * 9 + 6 * 36 == 324
    assert second_zagreb(K4) == 54
    assert second_zagreb(C6) == 24
    assert second_zagreb(SL1) == 6 * 9 + 24 * 18 + 6 * 36 == 702


def test_zagreb_against_brute_force():
    for g in (K4, C6, SL1, gen_oxide(2).graph):
        h = oracles.to_nx(g)
        assert first_zagreb(g) == oracles.m1(h)
        assert second_zagreb(g) == oracles.m2(h)


def test_narumi_katayama():
    assert narumi_katayama(K4) == 81
    assert narumi_katayama(C6) == 64
    cs2 = gen_chain_silicate(2).graph
    assert narumi_katayama(cs2) == F({2: 1, 3: 7})
    assert narumi_katayama(cs2).to_int() == oracles.nk(oracles.to_nx(cs2))


def test_isolated_vertex_is_an_error():
    lonely = build_graph(1, [])
    for fn in (narumi_katayama, mult_zagreb_2, lambda g: mult_zagreb_1(g, 2)):
        with pytest.raises(UndefinedIndexError):
            fn(lonely)


def test_mult_zagreb_1():
    assert mult_zagreb_1(K4, 1) == 81
    assert mult_zagreb_1(SL1, 0) == 1
    assert mult_zagreb_1(SL1, 2) == F({2: 12, 3: 36})
    assert mult_zagreb_1(SL1, 2).to_int() == oracles.pi1(oracles.to_nx(SL1), 2)
    with pytest.raises(ValueError):
        mult_zagreb_1(K4, 1.5)


def test_mult_zagreb_1_log10_real_c():
    assert mult_zagreb_1_log10(K4, 0.5) == pytest.approx(0.5 * math.log10(81), rel=1e-12)


def test_mult_zagreb_2():
    assert mult_zagreb_2(CS1) == 531441 == F({3: 12})
    assert mult_zagreb_2(C6) == F({2: 12})
    assert mult_zagreb_2(gen_oxide(1).graph) == F({2: 60})
    for g in (K4, C6, gen_oxide(1).graph):
        assert mult_zagreb_2(g).to_int() == oracles.pi2(oracles.to_nx(g))
        assert mult_zagreb_2_vertex_form(g) == mult_zagreb_2(g)


def test_mult_zagreb_1_star():
    assert mult_zagreb_1_star(CS1) == 46656
    assert mult_zagreb_1_star(C6) == F({2: 12})
    assert mult_zagreb_1_star(build_graph(3, [])) == 1
    assert mult_zagreb_1_star(SL1).to_int() == oracles.pi1star(oracles.to_nx(SL1))


def test_sum_connectivity():
    assert sum_connectivity(SL1, 0) == SL1.edge_count
    assert sum_connectivity(K4, 1) == 36 == first_zagreb(K4)
    assert sum_connectivity(SL1, 2) == 6 * 36 + 24 * 81 + 6 * 144 == 3024
    assert sum_connectivity(SL1, 2.0) == 3024
    assert isinstance(sum_connectivity(SL1, 2.0), int)


def test_sum_connectivity_real_alpha():
    got = sum_connectivity(CS1, 0.5)
    assert got == pytest.approx(6 * math.sqrt(6), rel=1e-12)
    g = gen_oxide(3).graph
    for a in (-0.5, -1, 0.5, 1.5):
        assert sum_connectivity(g, a) == pytest.approx(oracles.chi(oracles.to_nx(g), a), rel=1e-12)


def test_sum_connectivity_overflow_falls_back():
    big = sum_connectivity(K4, 400.5)
    assert float(big) == math.inf or big > 1e300
    import mpmath

    assert mpmath.log10(big) == pytest.approx(math.log10(6) + 400.5 * math.log10(6), rel=1e-12)


def test_compute_index_dispatch():
    assert compute_index(CS1, "pi1star") == 46656
    with pytest.raises(KeyError):
        compute_index(CS1, "randic")


graph_seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=60, deadline=None)
@given(graph_seeds, st.integers(2, 14))
def test_indices_match_brute_force_on_random_graphs(seed, size):
    rng = random.Random(seed)
    g = random_connected_graph(size, rng, rng.uniform(0, 0.6))
    h = oracles.to_nx(g)
    assert first_zagreb(g) == oracles.m1(h)
    assert second_zagreb(g) == oracles.m2(h)
    assert narumi_katayama(g).to_int() == oracles.nk(h)
    assert mult_zagreb_1(g, 3).to_int() == oracles.pi1(h, 3)
    assert mult_zagreb_2(g).to_int() == oracles.pi2(h)
    assert mult_zagreb_1_star(g).to_int() == oracles.pi1star(h)
    assert sum_connectivity(g, 3) == oracles.chi(h, 3)


@settings(max_examples=60, deadline=None)
@given(graph_seeds, st.integers(2, 20), st.integers(0, 4))
def test_identities_on_random_graphs(seed, size, c):
    rng = random.Random(seed)
    g = random_connected_graph(size, rng, rng.uniform(0, 0.5))
    assert sum_connectivity(g, 0) == g.edge_count
    assert sum_connectivity(g, 1) == first_zagreb(g)
    assert mult_zagreb_2(g) == mult_zagreb_2_vertex_form(g)
    assert mult_zagreb_1(g, c) == narumi_katayama(g) ** c


@pytest.mark.parametrize("family", FAMILIES)
def test_order_independence(family):
    g = generate((family, 3)).graph
    edges = g.edges()
    random.Random(7).shuffle(edges)
    h = build_graph(g.vertex_count, edges)
    for idx in ("m1", "m2", "pi2", "pi1star", "chi"):
        assert compute_index(h, idx) == compute_index(g, idx)
