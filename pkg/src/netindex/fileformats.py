"""Edge-list files and sweep CSVs.

Edge list::

    <FAMILY> <n> <|V|> <|E|>
    u v            (u < v, lexicographic order)

Sweep CSV columns: ``family,n,index,param,value_log10,value_exact``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path

from .factored import FactoredInteger
from .generators import Family, LabeledNetwork
from .graph import Graph, build_graph

CSV_COLUMNS = ("family", "n", "index", "param", "value_log10", "value_exact")
EXACT_DIGITS = 40


class FormatError(ValueError):
    pass


def format_edge_list(net: LabeledNetwork) -> str:
    g = net.graph
    lines = [f"{net.spec.family.value} {net.spec.n} {g.vertex_count} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def write_edge_list(net: LabeledNetwork, path) -> None:
    Path(path).write_text(format_edge_list(net), encoding="ascii")


def parse_edge_list(text: str) -> tuple[Family, int, Graph]:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty edge-list file")
    head = lines[0].split()
    if len(head) != 4:
        raise FormatError(f"bad header {lines[0]!r}: expected '<FAMILY> <n> <|V|> <|E|>'")
    try:
        family = Family(head[0])
        n, nv, ne = (int(x) for x in head[1:])
    except ValueError as exc:
        raise FormatError(f"bad header {lines[0]!r}: {exc}") from None
    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if len(edges) != ne:
        raise FormatError(f"header declares {ne} edges, file has {len(edges)}")
    return family, n, build_graph(nv, edges)


def read_edge_list(path) -> tuple[Family, int, Graph]:
    return parse_edge_list(Path(path).read_text(encoding="ascii"))


def format_number(x) -> str:
    """Integral values without a trailing '.0'."""
    if isinstance(x, int):
        return str(x)
    x = float(x)
    return str(int(x)) if x.is_integer() else repr(x)


def value_log10(value) -> float:
    if isinstance(value, FactoredInteger):
        return value.log10()
    if isinstance(value, int):
        return math.log10(value)
    import mpmath

    return float(mpmath.log10(value))


def exact_decimal(value) -> str:
    """Decimal expansion if the value is an exact integer of at most 40 digits."""
    if isinstance(value, FactoredInteger):
        if value.log10() >= EXACT_DIGITS + 1:
            return ""
        value = value.to_int()
    if isinstance(value, int):
        s = str(value)
        return s if len(s.lstrip("-")) <= EXACT_DIGITS else ""
    return ""


@dataclass(frozen=True, order=True)
class SweepRow:
    family: str
    index: str
    n: int
    param: str
    value_log10: float
    value_exact: str

    def as_csv(self) -> list[str]:
        return [self.family, str(self.n), self.index, self.param, f"{self.value_log10:.10f}", self.value_exact]


def format_sweep_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for row in sorted(rows, key=lambda r: (r.family, r.index, r.n, r.param)):
        w.writerow(row.as_csv())
    return buf.getvalue()


def parse_sweep_csv(text: str) -> list[SweepRow]:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise FormatError("empty CSV: missing header") from None
    for col in header:
        if col not in CSV_COLUMNS:
            raise FormatError(f"unknown column {col!r}")
    missing = [c for c in CSV_COLUMNS if c not in header]
    if missing:
        raise FormatError(f"missing column {missing[0]!r}")
    pos = {c: header.index(c) for c in CSV_COLUMNS}
    rows = []
    for lineno, rec in enumerate(reader, start=2):
        if not rec:
            continue
        if len(rec) != len(header):
            raise FormatError(f"line {lineno}: expected {len(header)} fields, got {len(rec)}")
        try:
            rows.append(
                SweepRow(
                    family=rec[pos["family"]],
                    index=rec[pos["index"]],
                    n=int(rec[pos["n"]]),
                    param=rec[pos["param"]],
                    value_log10=float(rec[pos["value_log10"]]),
                    value_exact=rec[pos["value_exact"]],
                )
            )
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    return rows
