"""Reference partition tables and closed-form index formulas, stored as data.

Values are kept exactly as given, known errors included; the verifier
decides what is right by comparing against generated graphs. Polynomials are
in the dimension ``n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from numbers import Real

import mpmath

from .factored import FactoredInteger
from .generators import Family
from .graph import DegreePairSpectrum, DegreeSpectrum
from .indices import IndexValue, exact_exponent


class DomainError(ValueError):
    """Requested n lies outside the range where a table or formula applies."""


@dataclass(frozen=True)
class Poly:
    """Integer polynomial in n, coefficients from the constant term up."""

    coeffs: tuple[int, ...]

    def __call__(self, n: int) -> int:
        return sum(c * n**k for k, c in enumerate(self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        a, b = a + (0,) * (size - len(a)), b + (0,) * (size - len(b))
        return Poly(tuple(x + y for x, y in zip(a, b)))

    def __str__(self) -> str:
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mag = abs(c)
            var = "" if k == 0 else "n" if k == 1 else f"n^{k}"
            body = str(mag) if (mag != 1 or not var) else ""
            sign = "-" if c < 0 else "+"
            parts.append((sign, body + var))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


def P(*coeffs: int) -> Poly:
    return Poly(tuple(coeffs))


# --- partition tables -------------------------------------------------------


@dataclass(frozen=True)
class PartitionTable:
    """Rows valid for ``n_min <= n <= n_max`` (``n_max=None``: unbounded)."""

    rows: tuple[tuple[object, Poly], ...]
    n_min: int
    n_max: int | None = None
    label: str = ""

    def covers(self, n: int) -> bool:
        return n >= self.n_min and (self.n_max is None or n <= self.n_max)


@dataclass(frozen=True)
class PartitionPolynomials:
    family: Family
    vertex_count: Poly
    edge_count: Poly
    vertex_tables: tuple[PartitionTable, ...]
    edge_tables: tuple[PartitionTable, ...]


def _table(label, n_min, rows, n_max=None) -> PartitionTable:
    return PartitionTable(tuple(rows), n_min, n_max, label)


PARTITIONS: dict[Family, PartitionPolynomials] = {
    Family.SL: PartitionPolynomials(
        Family.SL, P(0, 3, 15), P(0, 0, 36),
        (_table("SL vertex partition", 1, [(3, P(0, 6, 6)), (6, P(0, -3, 9))]),),
        (_table("SL edge partition", 1, [((3, 3), P(0, 6)), ((3, 6), P(0, 6, 18)), ((6, 6), P(0, -12, 18))]),),
    ),
    Family.CS: PartitionPolynomials(
        Family.CS, P(1, 3), P(0, 6),
        (_table("CS vertex partition", 1, [(3, P(2, 2)), (6, P(-1, 1))]),),
        (
            _table("CS edge partition (n = 1)", 1, [((3, 3), P(6)), ((3, 6), P(0)), ((6, 6), P(0))], n_max=1),
            _table("CS edge partition (n >= 2)", 2, [((3, 3), P(4, 1)), ((3, 6), P(-2, 4)), ((6, 6), P(-2, 1))]),
        ),
    ),
    Family.HX: PartitionPolynomials(
        Family.HX, P(1, -3, 3), P(6, -15, 9),
        (_table("HX vertex partition", 2, [(3, P(6)), (4, P(-12, 6)), (6, P(7, -9, 3))]),),
        (
            _table(
                "HX edge partition", 3,
                [((3, 4), P(12)), ((3, 6), P(6)), ((4, 4), P(-18, 6)), ((4, 6), P(-24, 12)),
                 ((6, 6), P(30, -33, 9))],
            ),
        ),
    ),
    Family.OX: PartitionPolynomials(
        Family.OX, P(0, 3, 9), P(0, 0, 18),
        (_table("OX vertex partition", 1, [(2, P(0, 6)), (4, P(0, -3, 9))]),),
        (_table("OX edge partition", 1, [((2, 4), P(0, 12)), ((4, 4), P(0, -12, 18))]),),
    ),
    Family.HC: PartitionPolynomials(
        Family.HC, P(0, 0, 6), P(0, -3, 9),
        (_table("HC vertex partition", 1, [(2, P(0, 6)), (3, P(0, -6, 6))]),),
        (_table("HC edge partition", 1, [((2, 2), P(6)), ((2, 3), P(-12, 12)), ((3, 3), P(6, -15, 9))]),),
    ),
}


def _pick(tables: tuple[PartitionTable, ...], n: int, what: str, family: Family) -> PartitionTable:
    for t in tables:
        if t.covers(n):
            return t
    names = ", ".join(f"{t.label} (n >= {t.n_min})" for t in tables)
    raise DomainError(f"{what} of {family} undefined at n={n}: {names}")


def vertex_table(family, n: int) -> PartitionTable:
    family = Family(family)
    return _pick(PARTITIONS[family].vertex_tables, n, "vertex partition", family)


def edge_table(family, n: int) -> PartitionTable:
    family = Family(family)
    return _pick(PARTITIONS[family].edge_tables, n, "edge partition", family)


def table_rows(table: PartitionTable, n: int) -> dict:
    """Evaluated rows, zero rows kept (a table can print 0)."""
    return {key: poly(n) for key, poly in table.rows}


def table_degree_spectrum(family, n: int) -> DegreeSpectrum:
    return DegreeSpectrum(table_rows(vertex_table(family, n), n))


def table_edge_spectrum(family, n: int) -> DegreePairSpectrum:
    return DegreePairSpectrum(table_rows(edge_table(family, n), n))


# --- theorem formulas -------------------------------------------------------

INDICES = ("pi1", "pi2", "chi", "pi1star")


@dataclass(frozen=True)
class ProductFormula:
    """``prod p ** (E_p(n) * (c if scaled_by_c else 1))``, or a literal constant."""

    exponents: dict[int, Poly] = field(default_factory=dict)
    scaled_by_c: bool = False
    literal: int | None = None

    def evaluate(self, n: int, c: int = 1) -> FactoredInteger:
        if self.literal is not None:
            return FactoredInteger.from_int(self.literal)
        scale = c if self.scaled_by_c else 1
        powers = {}
        for p, poly in self.exponents.items():
            e = poly(n) * scale
            if e < 0:
                raise DomainError(f"exponent of {p} is negative ({e}) at n={n}")
            powers[p] = e
        return FactoredInteger(powers)

    def __str__(self) -> str:
        if self.literal is not None:
            return str(self.literal)
        suffix = "c" if self.scaled_by_c else ""
        return " * ".join(
            f"{p}^(({poly}){suffix})" if suffix else f"{p}^({poly})" for p, poly in self.exponents.items()
        )


@dataclass(frozen=True)
class SumTerm:
    """``sign * coeff(n) * prod base ** (a*alpha + b)`` over ``powers``."""

    coeff: Poly
    powers: tuple[tuple[int, int, int], ...]  # (base, a, b)
    sign: int = 1

    def __str__(self) -> str:
        factors = []
        for base, a, b in self.powers:
            lin = " + ".join(
                s for s in ((f"{a}a" if a != 1 else "a") if a else "", str(b) if b else "") if s
            ) or "0"
            factors.append(f"{base}^({lin})")
        return ("-" if self.sign < 0 else "+") + f" ({self.coeff})*" + "*".join(factors)


@dataclass(frozen=True)
class SumFormula:
    terms: tuple[SumTerm, ...]

    def evaluate(self, n: int, alpha: Real) -> IndexValue:
        k = exact_exponent(alpha)
        if k is not None:
            total = 0
            for t in self.terms:
                val = t.sign * t.coeff(n)
                for base, a, b in t.powers:
                    val *= base ** (a * k + b)
                total += val
            return total
        a_f = float(alpha)
        try:
            return math.fsum(
                t.sign * t.coeff(n) * math.prod(math.pow(base, a * a_f + b) for base, a, b in t.powers)
                for t in self.terms
            )
        except OverflowError:
            x = mpmath.mpf(a_f)
            return mpmath.fsum(
                t.sign * t.coeff(n) * mpmath.fprod(mpmath.power(base, a * x + b) for base, a, b in t.powers)
                for t in self.terms
            )

    def __str__(self) -> str:
        text = " ".join(str(t) for t in self.terms)
        return text[2:] if text.startswith("+ ") else text


@dataclass(frozen=True)
class Piece:
    formula: ProductFormula | SumFormula
    n_min: int
    n_max: int | None = None

    def covers(self, n: int) -> bool:
        return n >= self.n_min and (self.n_max is None or n <= self.n_max)


@dataclass(frozen=True)
class TheoremFormula:
    family: Family
    index: str
    pieces: tuple[Piece, ...]
    source: str

    def piece(self, n: int) -> Piece:
        for pc in self.pieces:
            if pc.covers(n):
                return pc
        lo = min(pc.n_min for pc in self.pieces)
        raise DomainError(f"{self.source} {self.index} for {self.family} stated for n >= {lo}, got n={n}")

    def evaluate(self, n: int, *, c: int = 1, alpha: Real = 1) -> IndexValue:
        f = self.piece(n).formula
        if isinstance(f, ProductFormula):
            if exact_exponent(c) is None:
                raise ValueError(f"c must be a non-negative integer, got {c!r}")
            return f.evaluate(n, exact_exponent(c))
        return f.evaluate(n, alpha)


def _prod(exps: dict[int, Poly], scaled=False) -> ProductFormula:
    return ProductFormula(exps, scaled)


def _sum(*terms: SumTerm) -> SumFormula:
    return SumFormula(tuple(terms))


def _t(coeff: Poly, *powers, sign=1) -> SumTerm:
    return SumTerm(coeff, tuple(powers), sign)


def _theorem(family, index, source, *pieces):
    return TheoremFormula(family, index, tuple(pieces), source)


_SL, _CS, _HX, _OX, _HC = Family.SL, Family.CS, Family.HX, Family.OX, Family.HC

_ALL = [
    # silicate
    _theorem(_SL, "pi1", "SL closed forms", Piece(_prod({2: P(0, -3, 9), 3: P(0, 3, 15)}, True), 1)),
    _theorem(_SL, "pi2", "SL closed forms", Piece(_prod({2: P(0, -18, 54), 3: P(0, 0, 72)}), 1)),
    _theorem(_SL, "chi", "SL closed forms", Piece(_sum(
        _t(P(0, 1), (6, 1, 1)),
        _t(P(0, 2, 6), (3, 2, 1)),
        _t(P(0, -2, 3), (2, 2, 1), (3, 1, 1)),
    ), 1)),
    _theorem(_SL, "pi1star", "SL closed forms", Piece(_prod({2: P(0, -18, 36), 3: P(0, 6, 54)}), 1)),
    # chain silicate
    _theorem(_CS, "pi1", "CS closed forms", Piece(_prod({2: P(-1, 1), 3: P(1, 3)}, True), 1)),
    _theorem(_CS, "pi2", "CS closed forms", Piece(_prod({2: P(-6, 6), 3: P(0, 12)}), 1)),
    _theorem(_CS, "chi", "CS closed forms",
             Piece(_sum(_t(P(1), (6, 1, 1))), 1, 1),
             Piece(_sum(
                 _t(P(4, 1), (2, 1, 0), (3, 1, 0)),
                 _t(P(-2, 4), (3, 2, 0)),
                 _t(P(-2, 1), (2, 2, 0), (3, 1, 0)),
             ), 2)),
    _theorem(_CS, "pi1star", "CS closed forms",
             Piece(ProductFormula(literal=46656), 1, 1),
             Piece(_prod({2: P(0, 3), 3: P(-2, 10)}), 2)),
    # hexagonal: domains follow the partition tables the formulas derive from
    _theorem(_HX, "pi1", "HX closed forms", Piece(_prod({2: P(-17, 3, 3), 3: P(13, -9, 3)}, True), 2)),
    _theorem(_HX, "pi2", "HX closed forms", Piece(_prod({2: P(-56, -6, 18), 3: P(60, -54, 18)}), 2)),
    _theorem(_HX, "chi", "HX closed forms", Piece(_sum(
        _t(P(-9, 3), (2, 3, 1)),
        _t(P(-2, 1), (2, 1, 2), (3, 1, 1)),
        _t(P(10, -11, 3), (2, 2, 0), (3, 1, 1), sign=-1),
        _t(P(12), (7, 1, 0)),
        _t(P(6), (3, 2, 0)),
    ), 3)),
    _theorem(_HX, "pi1star", "HX closed forms",
             Piece(_prod({2: P(-18, -46, 18), 3: P(42, -33, 9), 5: P(-24, 12), 7: P(12)}), 3)),
    # oxide
    _theorem(_OX, "pi1", "OX closed forms", Piece(_prod({2: P(0, 0, 18)}, True), 1)),
    _theorem(_OX, "pi2", "OX closed forms", Piece(_prod({2: P(0, -12, 72)}), 1)),
    _theorem(_OX, "chi", "OX closed forms", Piece(_sum(
        _t(P(0, 1), (2, 1, 2), (3, 1, 1)),
        _t(P(0, -6, 9), (2, 3, 1)),
    ), 1)),
    _theorem(_OX, "pi1star", "OX closed forms", Piece(_prod({2: P(0, -24, 54), 3: P(0, 12)}), 1)),
    # honeycomb
    _theorem(_HC, "pi1", "HC closed forms", Piece(_prod({2: P(0, 6), 3: P(0, -6, 6)}, True), 1)),
    _theorem(_HC, "pi2", "HC closed forms", Piece(_prod({2: P(0, 12), 3: P(0, -18, 18)}), 1)),
    _theorem(_HC, "chi", "HC closed forms", Piece(_sum(
        _t(P(3), (2, 2, 1)),
        _t(P(-12, 12), (5, 1, 0)),
        _t(P(2, -5, 3), (2, 1, 0), (3, 1, 1)),
    ), 1)),
    _theorem(_HC, "pi1star", "HC closed forms",
             Piece(_prod({2: P(18, -15, 9), 3: P(6, -15, 9), 5: P(-12, 12)}), 1)),
]

THEOREMS: dict[tuple[Family, str], TheoremFormula] = {(t.family, t.index): t for t in _ALL}


def theorem(family, index: str) -> TheoremFormula:
    key = (Family(family), index)
    if key not in THEOREMS:
        raise KeyError(f"no reference formula for index {index!r} of {family}")
    return THEOREMS[key]


def theorem_value(family, index: str, n: int, *, c: int = 1, alpha: Real = 1) -> IndexValue:
    return theorem(family, index).evaluate(n, c=c, alpha=alpha)
