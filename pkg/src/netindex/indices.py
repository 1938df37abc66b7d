"""Degree-based topological indices computed directly from a graph.

Additive indices return Python ints. Multiplicative indices return
:class:`FactoredInteger`. The general sum-connectivity index is exact for
non-negative integer exponents and a float otherwise.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Real
from typing import Union

import mpmath

from .factored import FactoredInteger
from .graph import Graph, degree_pair_spectrum, degree_spectrum

IndexValue = Union[int, float, FactoredInteger, mpmath.mpf]


class UndefinedIndexError(ValueError):
    """A multiplicative index was requested on a graph with an isolated vertex."""


def _require_no_isolated(g: Graph, name: str) -> None:
    if any(d == 0 for d in g.degrees()):
        raise UndefinedIndexError(f"{name} is undefined: graph has an isolated vertex")


def exact_exponent(x) -> int | None:
    """``x`` as an int if it is a non-negative integral number, else None."""
    if isinstance(x, bool):
        return None
    if isinstance(x, int):
        return x if x >= 0 else None
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 and x >= 0 else None
    if isinstance(x, float) and x.is_integer() and x >= 0:
        return int(x)
    return None


def first_zagreb(g: Graph) -> int:
    return sum(d * d for d in g.degrees())


def second_zagreb(g: Graph) -> int:
    return sum(i * j * m for (i, j), m in degree_pair_spectrum(g).items())


def narumi_katayama(g: Graph) -> FactoredInteger:
    _require_no_isolated(g, "NK")
    return FactoredInteger.from_base_powers(degree_spectrum(g))


def mult_zagreb_1(g: Graph, c: int) -> FactoredInteger:
    k = exact_exponent(c)
    if k is None:
        raise ValueError(f"c must be a non-negative integer for exact evaluation, got {c!r}")
    _require_no_isolated(g, "Pi_1,c")
    return FactoredInteger.from_base_powers({d: cnt * k for d, cnt in degree_spectrum(g).items()})


def mult_zagreb_1_log10(g: Graph, c: float) -> float:
    """log10 of Pi_1,c for real ``c``."""
    _require_no_isolated(g, "Pi_1,c")
    return c * narumi_katayama(g).log10()


def mult_zagreb_2(g: Graph) -> FactoredInteger:
    """Edge form: product of d(u) d(v) over edges."""
    _require_no_isolated(g, "Pi_2")
    return FactoredInteger.from_base_powers(
        _merge_bases((i * j, m) for (i, j), m in degree_pair_spectrum(g).items())
    )


def mult_zagreb_2_vertex_form(g: Graph) -> FactoredInteger:
    """Vertex form: product of d(v) ** d(v) over vertices."""
    _require_no_isolated(g, "Pi_2")
    return FactoredInteger.from_base_powers({d: d * cnt for d, cnt in degree_spectrum(g).items()})


def mult_zagreb_1_star(g: Graph) -> FactoredInteger:
    return FactoredInteger.from_base_powers(
        _merge_bases((i + j, m) for (i, j), m in degree_pair_spectrum(g).items())
    )


def sum_connectivity(g: Graph, alpha: Real) -> IndexValue:
    """General sum-connectivity index, one power per distinct degree sum."""
    by_sum = _merge_bases((i + j, m) for (i, j), m in degree_pair_spectrum(g).items())
    k = exact_exponent(alpha)
    if k is not None:
        return sum(m * s**k for s, m in by_sum.items())
    a = float(alpha)
    try:
        return math.fsum(m * math.pow(s, a) for s, m in by_sum.items())
    except OverflowError:
        return mpmath.fsum(m * mpmath.power(s, mpmath.mpf(a)) for s, m in by_sum.items())


def _merge_bases(pairs) -> dict[int, int]:
    out: dict[int, int] = {}
    for base, m in pairs:
        out[base] = out.get(base, 0) + m
    return out


INDEX_NAMES = ("m1", "m2", "nk", "pi1", "pi2", "pi1star", "chi")


def compute_index(g: Graph, index: str, *, c: int = 2, alpha: Real = 2) -> IndexValue:
    """Dispatch by short index name (see ``INDEX_NAMES``)."""
    if index == "m1":
        return first_zagreb(g)
    if index == "m2":
        return second_zagreb(g)
    if index == "nk":
        return narumi_katayama(g)
    if index == "pi1":
        return mult_zagreb_1(g, c)
    if index == "pi2":
        return mult_zagreb_2(g)
    if index == "pi1star":
        return mult_zagreb_1_star(g)
    if index == "chi":
        return sum_connectivity(g, alpha)
    raise KeyError(f"unknown index {index!r}; expected one of {', '.join(INDEX_NAMES)}")
