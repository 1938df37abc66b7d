from itertools import combinations

import networkx as nx
import pytest

from netindex.closed_forms import PARTITIONS, table_degree_spectrum, table_edge_spectrum
from netindex.generators import (
    FAMILIES,
    OXYGEN,
    SILICON,
    DimensionError,
    Family,
    NetworkSpec,
    gen_chain_silicate,
    gen_hexagonal,
    gen_honeycomb,
    gen_oxide,
    gen_silicate,
    generate,
)
from netindex.graph import degree_pair_spectrum, degree_spectrum, delete_vertices
from oracles import to_nx

COUNTS = {
    Family.SL: (lambda n: 15 * n * n + 3 * n, lambda n: 36 * n * n),
    Family.CS: (lambda n: 3 * n + 1, lambda n: 6 * n),
    Family.HX: (lambda n: 3 * n * n - 3 * n + 1, lambda n: 9 * n * n - 15 * n + 6),
    Family.OX: (lambda n: 9 * n * n + 3 * n, lambda n: 18 * n * n),
    Family.HC: (lambda n: 6 * n * n, lambda n: 9 * n * n - 3 * n),
}


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("n", range(1, 11))
def test_counts_and_connectivity(family, n):
    g = generate(NetworkSpec(family, n)).graph
    nv, ne = COUNTS[family]
    assert (g.vertex_count, g.edge_count) == (nv(n), ne(n))
    assert g.is_connected()


def test_hexagonal_examples():
    g1 = gen_hexagonal(1).graph
    assert (g1.vertex_count, g1.edge_count) == (1, 0)
    g2 = gen_hexagonal(2).graph
    assert (g2.vertex_count, g2.edge_count) == (7, 12)
    assert degree_spectrum(g2) == {3: 6, 6: 1}
    g6 = gen_hexagonal(6).graph
    assert (g6.vertex_count, g6.edge_count) == (91, 240)  # 9*36 - 15*6 + 6


def test_honeycomb_examples():
    c6 = gen_honeycomb(1).graph
    assert (c6.vertex_count, c6.edge_count) == (6, 6)
    assert nx.is_isomorphic(to_nx(c6), nx.cycle_graph(6))
    assert degree_pair_spectrum(c6) == {(2, 2): 6}
    assert gen_honeycomb(2).graph.edge_count == 30
    g4 = gen_honeycomb(4).graph
    assert (g4.vertex_count, g4.edge_count) == (96, 132)


@pytest.mark.parametrize("n", range(1, 6))
def test_honeycomb_is_planar_hexagonal_mesh(n):
    h = to_nx(gen_honeycomb(n).graph)
    assert nx.check_planarity(h)[0]
    assert nx.girth(h) == 6
    # independent cycle count: one hexagon per interior point of HX_{n+1}
    assert h.number_of_edges() - h.number_of_nodes() + 1 == 3 * n * n - 3 * n + 1


def test_silicate_examples():
    net = gen_silicate(1)
    assert (net.graph.vertex_count, net.graph.edge_count) == (18, 36)
    assert degree_pair_spectrum(net.graph) == {(3, 3): 6, (3, 6): 24, (6, 6): 6}
    net2 = gen_silicate(2)
    assert (net2.graph.vertex_count, net2.graph.edge_count) == (66, 144)
    assert degree_spectrum(net2.graph) == {3: 36, 6: 30}
    assert degree_pair_spectrum(net2.graph) == {(3, 3): 12, (3, 6): 84, (6, 6): 48}


@pytest.mark.parametrize("n", range(1, 6))
def test_silicons_sit_in_single_tetrahedra(n):
    net = gen_silicate(n)
    g = net.graph
    silicons = net.vertices_with_role(SILICON)
    assert len(silicons) == 6 * n * n
    for s in silicons:
        assert g.degree(s) == 3
        block = (s,) + g.adjacency[s]
        assert all(b in g.adjacency[a] for a, b in combinations(block, 2))
        assert all(net.roles[o] == OXYGEN for o in g.adjacency[s])
    # each oxygen-oxygen edge belongs to exactly one tetrahedron
    owner = {}
    for s in silicons:
        for a, b in combinations(g.adjacency[s], 2):
            assert (a, b) not in owner
            owner[(a, b)] = s
    assert len(owner) + 3 * len(silicons) == g.edge_count


def test_oxide_examples():
    g1 = gen_oxide(1).graph
    assert (g1.vertex_count, g1.edge_count) == (12, 18)
    g2 = gen_oxide(2).graph
    assert (g2.vertex_count, g2.edge_count) == (42, 72)
    assert degree_spectrum(g2) == {2: 12, 4: 30}
    g5 = gen_oxide(5).graph
    assert (g5.vertex_count, g5.edge_count) == (240, 450)


def test_chain_silicate_examples():
    g1 = gen_chain_silicate(1).graph
    assert nx.is_isomorphic(to_nx(g1), nx.complete_graph(4))
    g2 = gen_chain_silicate(2).graph
    assert (g2.vertex_count, g2.edge_count) == (7, 12)
    assert degree_pair_spectrum(g2) == {(3, 3): 6, (3, 6): 6}
    g5 = gen_chain_silicate(5).graph
    assert (g5.vertex_count, g5.edge_count) == (16, 30)
    assert degree_spectrum(g5) == {3: 12, 6: 4}


def test_chain_no_vertex_in_three_tetrahedra():
    net = gen_chain_silicate(6)
    g = net.graph
    membership = {v: 0 for v in range(g.vertex_count)}
    for s in net.vertices_with_role(SILICON):
        for v in g.adjacency[s]:
            membership[v] += 1
    assert max(membership.values()) == 2


def _table_range(family):
    return range(3 if family is Family.HX else 1, 16)


@pytest.mark.parametrize("family", FAMILIES)
def test_tables_reproduced(family):
    for n in _table_range(family):
        g = generate((family, n)).graph
        assert degree_spectrum(g) == table_degree_spectrum(family, n), n
        assert degree_pair_spectrum(g) == table_edge_spectrum(family, n), n


def test_hx_vertex_table_at_two():
    assert degree_spectrum(gen_hexagonal(2).graph) == table_degree_spectrum("HX", 2)


@pytest.mark.parametrize("n", range(1, 11))
def test_oxide_is_silicate_without_silicons(n):
    sl = gen_silicate(n)
    stripped = delete_vertices(sl.graph, sl.vertices_with_role(SILICON))
    ox = gen_oxide(n).graph
    assert stripped == ox
    assert degree_spectrum(stripped) == degree_spectrum(ox)


@pytest.mark.parametrize("family", FAMILIES)
def test_deterministic(family):
    a = generate((family, 4))
    b = generate(NetworkSpec(family, 4))
    assert a.graph.edges() == b.graph.edges()
    assert a.roles == b.roles


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("n", [0, -1])
def test_invalid_dimension(family, n):
    with pytest.raises(DimensionError, match="invalid dimension"):
        generate((family, n))


def test_dispatch():
    assert generate(("HC", 1)).graph == gen_honeycomb(1).graph
    assert generate((Family.SL, 2)).graph.vertex_count == 66
    with pytest.raises(ValueError):
        generate(("XX", 2))


def test_partition_polynomials_sum_to_counts():
    for family, part in PARTITIONS.items():
        nv, ne = COUNTS[family]
        for n in range(3, 13):
            for t in part.vertex_tables:
                if t.covers(n):
                    assert sum(p(n) for _, p in t.rows) == part.vertex_count(n) == nv(n)
            for t in part.edge_tables:
                if t.covers(n):
                    assert sum(p(n) for _, p in t.rows) == part.edge_count(n) == ne(n)
