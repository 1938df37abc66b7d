import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netindex.graph import (
    DegreePairSpectrum,
    DegreeSpectrum,
    GraphError,
    build_graph,
    degree_pair_spectrum,
    degree_spectrum,
    delete_vertices,
)
from netindex.verify import check_lemma_identities

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_k4():
    g = build_graph(4, K4_EDGES)
    assert g.edge_count == 6
    assert [g.degree(v) for v in range(4)] == [3, 3, 3, 3]
    assert degree_spectrum(g) == {3: 4}
    assert degree_pair_spectrum(g) == {(3, 3): 6}


def test_single_vertex():
    g = build_graph(1, [])
    assert g.edge_count == 0
    assert g.degree(0) == 0
    assert g.is_connected()


@pytest.mark.parametrize(
    "n, edges, fragment",
    [
        (3, [(0, 1), (1, 0)], "duplicate"),
        (3, [(0, 1), (0, 1)], "duplicate"),
        (3, [(1, 1)], "self-loop"),
        (3, [(0, 3)], "out of range"),
        (3, [(-1, 2)], "out of range"),
    ],
)
def test_build_errors_name_edge(n, edges, fragment):
    with pytest.raises(GraphError, match=fragment) as info:
        build_graph(n, edges)
    u, v = edges[-1]
    assert f"({u}, {v})" in str(info.value)


def test_degree_out_of_range():
    g = build_graph(2, [(0, 1)])
    with pytest.raises(IndexError):
        g.degree(2)


def test_spectra_drop_zero_rows():
    assert DegreeSpectrum({3: 6, 4: 0, 6: 1}) == {3: 6, 6: 1}
    assert DegreePairSpectrum({(4, 3): 2, (4, 4): 0}) == {(3, 4): 2}
    assert DegreePairSpectrum({(3, 4): 2})[(4, 3)] == 2


def test_delete_vertices_relabels_in_order():
    g = build_graph(4, K4_EDGES)
    h = delete_vertices(g, [1])
    assert h == build_graph(3, [(0, 1), (0, 2), (1, 2)])


@st.composite
def simple_graphs(draw, max_vertices=12):
    n = draw(st.integers(1, max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return n, chosen


@given(simple_graphs(), st.randoms())
def test_canonical_under_edge_permutation(graph, rnd):
    n, edges = graph
    shuffled = [(v, u) if rnd.random() < 0.5 else (u, v) for u, v in edges]
    rnd.shuffle(shuffled)
    assert build_graph(n, edges) == build_graph(n, shuffled)


@given(simple_graphs())
def test_symmetric_adjacency(graph):
    g = build_graph(*graph)
    for u, nbrs in enumerate(g.adjacency):
        assert list(nbrs) == sorted(set(nbrs))
        for v in nbrs:
            assert u in g.adjacency[v]


@settings(max_examples=200)
@given(simple_graphs())
def test_handshake_and_lemma_rows(graph):
    g = build_graph(*graph)
    assert sum(g.degrees()) == 2 * g.edge_count
    ds, ps = degree_spectrum(g), degree_pair_spectrum(g)
    assert ds.vertex_total == g.vertex_count
    assert ps.edge_total == g.edge_count
    assert all(r == 0 for r in check_lemma_identities(ds, ps, g.vertex_count, g.edge_count).values())
