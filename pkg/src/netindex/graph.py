"""Immutable simple undirected graphs and degree partitions.

Vertices are dense integers ``0..vertex_count-1``; adjacency is kept as a
sorted tuple of neighbours per vertex so that two graphs built from the same
edge set (in any order) compare equal.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping


class GraphError(ValueError):
    """Raised when an edge list does not describe a simple graph."""


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, v: int) -> int:
        if not 0 <= v < self.vertex_count:
            raise IndexError(f"vertex {v} out of range 0..{self.vertex_count - 1}")
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self.adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertex_count


def build_graph(vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a canonical :class:`Graph`.

    Duplicate edges (in either orientation), self-loops and out-of-range ids
    raise :class:`GraphError` naming the offending edge.
    """
    if vertex_count < 0:
        raise GraphError(f"negative vertex count {vertex_count}")
    nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
    for u, v in edges:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphError(f"edge ({u}, {v}): vertex id out of range 0..{vertex_count - 1}")
        if u == v:
            raise GraphError(f"edge ({u}, {v}): self-loop")
        if v in nbrs[u]:
            raise GraphError(f"edge ({u}, {v}): duplicate edge")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(vertex_count, tuple(tuple(sorted(s)) for s in nbrs))


def delete_vertices(g: Graph, doomed: Iterable[int]) -> Graph:
    """Induced subgraph on the surviving vertices, relabelled in original order."""
    doomed = set(doomed)
    keep = [v for v in range(g.vertex_count) if v not in doomed]
    relabel = {v: i for i, v in enumerate(keep)}
    edges = [(relabel[u], relabel[v]) for u, v in g.edges() if u in relabel and v in relabel]
    return build_graph(len(keep), edges)


class DegreeSpectrum(Mapping[int, int]):
    """Vertex counts per degree. Zero counts are not stored."""

    def __init__(self, counts: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = counts.items() if isinstance(counts, Mapping) else counts
        data: dict[int, int] = {}
        for deg, cnt in items:
            if cnt < 0:
                raise ValueError(f"negative count {cnt} for degree {deg}")
            if cnt:
                data[int(deg)] = data.get(int(deg), 0) + int(cnt)
        self._data = dict(sorted(data.items()))

    def __getitem__(self, key: int) -> int:
        return self._data[key]

    def __iter__(self):
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def get(self, key, default=0):
        return self._data.get(key, default)

    def __eq__(self, other) -> bool:
        if isinstance(other, Mapping):
            return self._data == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._data.items()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._data!r})"

    @property
    def vertex_total(self) -> int:
        return sum(self._data.values())

    @property
    def degree_total(self) -> int:
        return sum(d * c for d, c in self._data.items())


class DegreePairSpectrum(Mapping[tuple[int, int], int]):
    """Edge counts per unordered endpoint-degree pair ``(i, j)``, ``i <= j``."""

    def __init__(self, counts: Mapping[tuple[int, int], int] | Iterable = ()):
        items = counts.items() if isinstance(counts, Mapping) else counts
        data: dict[tuple[int, int], int] = {}
        for (i, j), cnt in items:
            if cnt < 0:
                raise ValueError(f"negative count {cnt} for pair ({i}, {j})")
            key = (min(i, j), max(i, j))
            if cnt:
                data[key] = data.get(key, 0) + int(cnt)
        self._data = dict(sorted(data.items()))

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self._data[(min(i, j), max(i, j))]

    def __iter__(self):
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def get(self, key, default=0):
        i, j = key
        return self._data.get((min(i, j), max(i, j)), default)

    def __eq__(self, other) -> bool:
        if isinstance(other, Mapping):
            return self._data == DegreePairSpectrum(other)._data
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._data.items()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._data!r})"

    @property
    def edge_total(self) -> int:
        return sum(self._data.values())


def degree_spectrum(g: Graph) -> DegreeSpectrum:
    return DegreeSpectrum(Counter(g.degrees()))


def degree_pair_spectrum(g: Graph) -> DegreePairSpectrum:
    deg = g.degrees()
    tally = Counter()
    for u, v in g.edges():
        a, b = deg[u], deg[v]
        tally[(a, b) if a <= b else (b, a)] += 1
    return DegreePairSpectrum(tally)
