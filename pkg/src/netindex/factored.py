"""Exact positive integers stored as prime -> exponent maps.

Multiplicative indices of the lattice families reach values like 3**(72 n**2);
keeping them factored makes products, powers and equality checks cheap.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping


def factorize(m: int) -> dict[int, int]:
    """Trial-division factorization of a positive integer."""
    if m < 1:
        raise ValueError(f"cannot factor non-positive integer {m}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def _is_prime(p: int) -> bool:
    return p >= 2 and factorize(p) == {p: 1}


class FactoredInteger:
    __slots__ = ("_factors",)

    def __init__(self, factors: Mapping[int, int] | Iterable[tuple[int, int]] = (), *, check: bool = True):
        items = factors.items() if isinstance(factors, Mapping) else factors
        acc: dict[int, int] = {}
        for p, e in items:
            p, e = int(p), int(e)
            if e < 0:
                raise ValueError(f"negative exponent {e} for prime {p}")
            if check and not _is_prime(p):
                raise ValueError(f"{p} is not prime")
            if e:
                acc[p] = acc.get(p, 0) + e
        self._factors = dict(sorted(acc.items()))

    @classmethod
    def from_int(cls, m: int) -> "FactoredInteger":
        return cls(factorize(m), check=False)

    @classmethod
    def from_base_powers(cls, powers: Mapping[int, int]) -> "FactoredInteger":
        """Product of ``base ** k`` over the mapping; bases need not be prime."""
        out = cls()
        for base, k in powers.items():
            out = out * cls.from_int(base) ** k
        return out

    @property
    def factors(self) -> dict[int, int]:
        return dict(self._factors)

    def __mul__(self, other: "FactoredInteger") -> "FactoredInteger":
        if isinstance(other, int):
            other = FactoredInteger.from_int(other)
        if not isinstance(other, FactoredInteger):
            return NotImplemented
        acc = dict(self._factors)
        for p, e in other._factors.items():
            acc[p] = acc.get(p, 0) + e
        return FactoredInteger(acc, check=False)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "FactoredInteger":
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {k!r}")
        return FactoredInteger({p: e * k for p, e in self._factors.items()}, check=False)

    def __eq__(self, other) -> bool:
        if isinstance(other, FactoredInteger):
            return self._factors == other._factors
        if isinstance(other, int) and not isinstance(other, bool):
            return other >= 1 and self._factors == factorize(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._factors.items()))

    def log10(self) -> float:
        return math.fsum(e * math.log10(p) for p, e in self._factors.items())

    def to_int(self) -> int:
        out = 1
        for p, e in self._factors.items():
            out *= p**e
        return out

    def ratio(self, other: "FactoredInteger") -> dict[int, int]:
        """Exponent-wise difference ``self / other``; empty iff equal."""
        keys = sorted(set(self._factors) | set(other._factors))
        diff = {p: self._factors.get(p, 0) - other._factors.get(p, 0) for p in keys}
        return {p: d for p, d in diff.items() if d}

    def __str__(self) -> str:
        if not self._factors:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self._factors.items())

    def __repr__(self) -> str:
        return f"FactoredInteger({self._factors!r})"


def fi_mul(a: FactoredInteger, b: FactoredInteger) -> FactoredInteger:
    return a * b


def fi_pow(a: FactoredInteger, k: int) -> FactoredInteger:
    return a**k


def fi_log10(a: FactoredInteger) -> float:
    return a.log10()
