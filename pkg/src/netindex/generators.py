"""Constructions of the five network families.

All families are built combinatorially from the triangular lattice in cube
coordinates ``(x, y, z)`` with ``x + y + z = 0``; we store only the axial pair
``(q, r) = (x, z)``.

* ``HX_n``: lattice points within hex distance ``n - 1`` of the origin.
* ``HC_n``: one vertex per unit triangle of ``HX_{n+1}``, adjacent when two
  triangles share a lattice edge.
* ``SL_n``: every ``HC_n`` vertex becomes a silicon; every ``HC_n`` edge gets a
  shared oxygen; degree-2 silicons get one pendant oxygen; each silicon plus
  its three oxygens forms a K4.
* ``OX_n``: ``SL_n`` with silicons deleted.
* ``CS_n``: a path of K4 tetrahedra sharing single corners.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .graph import Graph, build_graph, delete_vertices


class Family(str, Enum):
    SL = "SL"
    CS = "CS"
    HX = "HX"
    OX = "OX"
    HC = "HC"

    def __str__(self) -> str:
        return self.value


FAMILIES = tuple(Family)

SILICON = "silicon"
OXYGEN = "oxygen"
PLAIN = "plain"


class DimensionError(ValueError):
    """Raised for a dimension outside a family's domain (n < 1)."""


@dataclass(frozen=True)
class NetworkSpec:
    family: Family
    n: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if not isinstance(self.n, int) or self.n < 1:
            raise DimensionError(f"invalid dimension n={self.n!r} for {self.family}: need n >= 1")


@dataclass(frozen=True)
class LabeledNetwork:
    graph: Graph
    spec: NetworkSpec
    roles: tuple[str, ...] | None = None

    def vertices_with_role(self, role: str) -> list[int]:
        if self.roles is None:
            return []
        return [v for v, r in enumerate(self.roles) if r == role]


# The six unit directions in axial coordinates.
_DIRECTIONS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))


def _hex_points(radius: int) -> list[tuple[int, int]]:
    """Axial points with hex distance <= radius, row-major (r, then q)."""
    pts = []
    for r in range(-radius, radius + 1):
        for q in range(max(-radius, -r - radius), min(radius, -r + radius) + 1):
            pts.append((q, r))
    return pts


def _lattice_triangles(radius: int) -> list[tuple[tuple[int, int], ...]]:
    """Unit triangles of the hexagonal patch of given radius.

    Each triangle is anchored at its lexicographically-first-generated corner
    ``p`` as either ``{p, p+(1,0), p+(0,1)}`` or ``{p, p+(1,0), p+(1,-1)}``.
    """
    inside = set(_hex_points(radius))
    tris = []
    for q, r in _hex_points(radius):
        for corners in (((q, r), (q + 1, r), (q, r + 1)), ((q, r), (q + 1, r), (q + 1, r - 1))):
            if all(c in inside for c in corners):
                tris.append(corners)
    return tris


def _check_n(family: Family, n: int) -> NetworkSpec:
    return NetworkSpec(family, n)


def gen_hexagonal(n: int) -> LabeledNetwork:
    spec = _check_n(Family.HX, n)
    pts = _hex_points(n - 1)
    index = {p: i for i, p in enumerate(pts)}
    edges = []
    for i, (q, r) in enumerate(pts):
        for dq, dr in _DIRECTIONS[:3]:
            j = index.get((q + dq, r + dr))
            if j is not None:
                edges.append((i, j))
    return LabeledNetwork(build_graph(len(pts), edges), spec, (PLAIN,) * len(pts))


def _honeycomb_graph(n: int) -> Graph:
    tris = _lattice_triangles(n)
    by_edge: dict[tuple, list[int]] = {}
    for t, corners in enumerate(tris):
        for a, b in combinations(corners, 2):
            by_edge.setdefault(tuple(sorted((a, b))), []).append(t)
    edges = sorted(tuple(ts) for ts in by_edge.values() if len(ts) == 2)
    return build_graph(len(tris), edges)


def gen_honeycomb(n: int) -> LabeledNetwork:
    spec = _check_n(Family.HC, n)
    g = _honeycomb_graph(n)
    return LabeledNetwork(g, spec, (PLAIN,) * g.vertex_count)


def gen_silicate(n: int) -> LabeledNetwork:
    spec = _check_n(Family.SL, n)
    hc = _honeycomb_graph(n)
    n_si = hc.vertex_count
    oxygens_of: list[list[int]] = [[] for _ in range(n_si)]
    next_id = n_si
    for u, v in hc.edges():
        oxygens_of[u].append(next_id)
        oxygens_of[v].append(next_id)
        next_id += 1
    for s in range(n_si):
        if hc.degree(s) == 2:
            oxygens_of[s].append(next_id)
            next_id += 1
    edges = []
    for s, oxy in enumerate(oxygens_of):
        assert len(oxy) == 3, f"silicon {s} has {len(oxy)} oxygens"
        edges.extend((s, o) for o in oxy)
        edges.extend(combinations(oxy, 2))
    roles = (SILICON,) * n_si + (OXYGEN,) * (next_id - n_si)
    return LabeledNetwork(build_graph(next_id, edges), spec, roles)


def gen_oxide(n: int) -> LabeledNetwork:
    spec = _check_n(Family.OX, n)
    sl = gen_silicate(n)
    g = delete_vertices(sl.graph, sl.vertices_with_role(SILICON))
    return LabeledNetwork(g, spec, (OXYGEN,) * g.vertex_count)


def gen_chain_silicate(n: int) -> LabeledNetwork:
    """Vertex order: x_0, then (s_i, a_i, x_i) for i = 1..n.

    Tetrahedron i is the K4 on {s_i, a_i, x_{i-1}, x_i}; x_0 and x_n are the
    unshared end corners.
    """
    spec = _check_n(Family.CS, n)
    roles = [OXYGEN]
    edges = []
    prev = 0
    for i in range(n):
        s, a, x = 3 * i + 1, 3 * i + 2, 3 * i + 3
        roles += [SILICON, OXYGEN, OXYGEN]
        edges.extend(combinations((prev, s, a, x), 2))
        prev = x
    return LabeledNetwork(build_graph(3 * n + 1, edges), spec, tuple(roles))


_GENERATORS = {
    Family.SL: gen_silicate,
    Family.CS: gen_chain_silicate,
    Family.HX: gen_hexagonal,
    Family.OX: gen_oxide,
    Family.HC: gen_honeycomb,
}


def generate(spec: NetworkSpec | tuple) -> LabeledNetwork:
    if not isinstance(spec, NetworkSpec):
        spec = NetworkSpec(*spec)
    return _GENERATORS[spec.family](spec.n)
