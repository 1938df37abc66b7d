"""Command-line interface: gen, compute, verify, sweep, plot.

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import verify as vf
from .fileformats import (
    FormatError,
    SweepRow,
    exact_decimal,
    format_edge_list,
    format_number,
    format_sweep_csv,
    parse_sweep_csv,
    value_log10,
)
from .generators import FAMILIES, DimensionError, Family, NetworkSpec, generate
from .indices import INDEX_NAMES, compute_index
from .plot import render_svg

FIGURE_INDICES = ("pi1", "pi2", "chi", "pi1star")


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}: expected A..B") from None
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _split(values) -> list[str]:
    out = []
    for v in values or []:
        out += [s for s in v.split(",") if s]
    return out


def _families(values, default=FAMILIES) -> list[Family]:
    names = _split(values)
    if values is None:
        return list(default)
    try:
        return [Family(s.upper()) for s in names]
    except ValueError as exc:
        raise UsageError(f"unknown family: {exc}") from None


def _numbers(values, default, cast):
    names = _split(values)
    if not names:
        return list(default)
    try:
        return [cast(s) for s in names]
    except ValueError:
        raise UsageError(f"bad number in {','.join(names)!r}") from None


def _alpha(s: str):
    x = float(s)
    return int(x) if x.is_integer() else x


def _c(s: str) -> int:
    x = int(s)
    if x < 0:
        raise ValueError(s)
    return x


def _write(path, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="ascii")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def cmd_gen(args) -> int:
    net = generate(NetworkSpec(Family(args.family.upper()), args.n))
    text = format_edge_list(net)
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_compute(args) -> int:
    net = generate(NetworkSpec(Family(args.family.upper()), args.n))
    c = _numbers(args.c, [2], _c)[0]
    alpha = _numbers(args.alpha, [2], _alpha)[0]
    value = compute_index(net.graph, args.index, c=c, alpha=alpha)
    print(f"{net.spec.family} {net.spec.n} {args.index}")
    if hasattr(value, "factors"):
        print(f"factored: {value}")
    exact = exact_decimal(value)
    if exact:
        print(f"decimal: {exact}")
    elif not hasattr(value, "factors") and not isinstance(value, int):
        print(f"value: {format_number(value)}")
    print(f"log10: {value_log10(value):.10f}")
    return 0


def build_report(families, n_range, c_values, alpha_values) -> vf.VerificationReport:
    report = vf.VerificationReport()
    for fam in families:
        report.extend(vf.verify_family(fam, n_range, c_values, alpha_values))
    return report


def cmd_verify(args) -> int:
    families = _families(args.family)
    c_values = _numbers(args.c, [2], _c)
    alpha_values = _numbers(args.alpha, [2], _alpha)
    report = build_report(families, args.n_range, c_values, alpha_values)
    if args.out:
        _write(args.out, report.to_json())
    for fam, counts in report.summary().items():
        print(f"{fam}: " + " ".join(f"{k}={v}" for k, v in counts.items()))
    code, problems = vf.mismatch_outcome(report, _split(args.expect_mismatch))
    for e in report.mismatches():
        print(f"MISMATCH {e.family} n={e.n} {e.quantity}: reference={e.paper_value} graph={e.oracle_value}")
    for p in problems:
        print(p, file=sys.stderr)
    return code


def sweep_rows(families, n_range, indices, c: int, alpha) -> list[SweepRow]:
    rows = []
    for fam in families:
        for n in n_range:
            g = generate(NetworkSpec(fam, n)).graph
            for index in indices:
                value = compute_index(g, index, c=c, alpha=alpha)
                param = f"c={c}" if index == "pi1" else f"alpha={format_number(alpha)}" if index == "chi" else ""
                rows.append(SweepRow(fam.value, index, n, param, value_log10(value), exact_decimal(value)))
    return rows


def cmd_sweep(args) -> int:
    if args.n_range.start < 2:
        raise UsageError("sweep requires n >= 2")
    families = _families(args.family)
    indices = _split(args.index) or list(FIGURE_INDICES)
    for ix in indices:
        if ix not in INDEX_NAMES:
            raise UsageError(f"unknown index {ix!r}; expected one of {', '.join(INDEX_NAMES)}")
    c = _numbers(args.c, [2], _c)[0]
    alpha = _numbers(args.alpha, [2], _alpha)[0]
    text = format_sweep_csv(sweep_rows(families, args.n_range, indices, c, alpha))
    target = args.csv or args.out
    if target:
        _write(target, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_plot(args) -> int:
    try:
        text = Path(args.csv).read_text(encoding="ascii")
    except OSError as exc:
        raise UsageError(f"cannot read {args.csv}: {exc.strerror}") from None
    svg = render_svg(parse_sweep_csv(text))
    target = args.svg or args.out
    if target:
        _write(target, svg)
    else:
        sys.stdout.write(svg)
    return 0


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="netindex", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write the edge list of one network")
    g.add_argument("--family", required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("compute", help="compute one index on one network")
    c.add_argument("--family", required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--index", required=True, choices=INDEX_NAMES)
    c.add_argument("--c", action="append")
    c.add_argument("--alpha", action="append")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="check reference tables and formulas against generated graphs")
    v.add_argument("--family", action="append", help="family or comma list (default: all)")
    v.add_argument("--n-range", type=parse_range, default=parse_range("1..10"))
    v.add_argument("--c", action="append", help="c values, comma list (default 2)")
    v.add_argument("--alpha", action="append", help="alpha values, comma list (default 2)")
    v.add_argument("--out", help="JSON report path")
    v.add_argument("--expect-mismatch", action="append", help="quantities allowed (and required) to mismatch")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", help="index values over a range of n as CSV")
    s.add_argument("--family", action="append")
    s.add_argument("--n-range", type=parse_range, default=parse_range("2..12"))
    s.add_argument("--index", action="append")
    s.add_argument("--c", action="append")
    s.add_argument("--alpha", action="append")
    s.add_argument("--csv")
    s.add_argument("--out")
    s.set_defaults(func=cmd_sweep)

    pl = sub.add_parser("plot", help="render a sweep CSV as an SVG chart")
    pl.add_argument("--csv", required=True)
    pl.add_argument("--svg")
    pl.add_argument("--out")
    pl.set_defaults(func=cmd_plot)
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except DimensionError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except (UsageError, FormatError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
