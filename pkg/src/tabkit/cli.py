"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 infeasible parameters.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import __version__
from .bijections import inc_to_schroder, path_to_syt, phi, phi_fiber, schroder_to_inc, syt_to_path
from .cache import cached_enumerate_inc
from .csp import hook_csp_report, rect_counterexample
from .errors import DomainError, TabkitError
from .paths import LatticePath, SchroderPath, enumerate_schroder, narayana_row
from .polynomial import QPolynomial
from .promotion import orbits, order_of, promote_power
from .tableaux import IncreasingTableau, Partition
from .verify import run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INFEASIBLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class Infeasible(Exception):
    pass


def parse_shape(text: str) -> Partition:
    """``3x3`` (rows x columns), ``hook:N,r`` or an explicit partition ``4,1,1``."""
    text = text.strip().lower()
    try:
        if text.startswith("hook:"):
            N, r = (int(x) for x in text[5:].split(","))
            return Partition.hook(N, r)
        if "x" in text:
            m, n = (int(x) for x in text.split("x"))
            return Partition.rectangle(m, n)
        if text in ("", "empty"):
            return Partition(())
        return Partition(tuple(int(x) for x in text.split(",")))
    except (ValueError, TabkitError) as exc:
        raise UsageError(f"cannot parse shape {text!r}: {exc}") from exc


def _tableau_arg(text: str) -> IncreasingTableau:
    try:
        if text.lstrip().startswith("{"):
            return IncreasingTableau.from_json(text)
        return IncreasingTableau.from_text(text)
    except (TabkitError, ValueError, KeyError) as exc:
        raise UsageError(f"invalid tableau {text!r}: {exc}") from exc


def _emit_tableaux(tabs: Sequence[IncreasingTableau], fmt: str, out) -> None:
    if fmt == "json":
        for t in tabs:
            out.write(t.to_json() + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["index", "k", "tableau"])
        for i, t in enumerate(tabs):
            w.writerow([i, t.k, t.to_text()])
    else:
        for t in tabs:
            out.write(t.to_text() + "\n")


def cmd_enumerate(args, out) -> int:
    shape = parse_shape(args.shape)
    tabs = cached_enumerate_inc(shape, args.k, args.cache_dir)
    if not tabs and not args.count_only:
        raise Infeasible(f"Inc_{args.k}({shape}) is empty")
    if args.count_only:
        out.write(f"{len(tabs)}\n")
        return EXIT_OK if tabs else EXIT_INFEASIBLE
    _emit_tableaux(tabs, args.format, out)
    return EXIT_OK


def cmd_count(args, out) -> int:
    shape = parse_shape(args.shape)
    ks = [args.k] if args.k is not None else range(max(shape.N, 1))
    counts = {k: len(cached_enumerate_inc(shape, k, args.cache_dir)) for k in ks}
    counts = {k: c for k, c in counts.items() if c or args.k is not None}
    if args.format == "json":
        out.write(json.dumps({"shape": list(shape.parts), "counts": counts, "total": sum(counts.values())}) + "\n")
    else:
        for k, c in counts.items():
            out.write(f"k={k}\t{c}\n")
        out.write(f"total\t{sum(counts.values())}\n")
    return EXIT_OK


def cmd_narayana(args, out) -> int:
    try:
        row = narayana_row(args.m, args.n)
    except DomainError as exc:
        raise Infeasible(str(exc)) from exc
    poly = QPolynomial(row)
    symmetric = row == row[::-1]
    if args.format == "json":
        out.write(json.dumps({"m": args.m, "n": args.n, "row": row, "N(1)": poly(1), "N(2)": poly(2),
                              "symmetric": symmetric}) + "\n")
    else:
        out.write(",".join(map(str, row)) + "\n")
        out.write(f"N_{{{args.m},{args.n}}}(1) = {poly(1)}\n")
        out.write(f"N_{{{args.m},{args.n}}}(2) = {poly(2)}\n")
        out.write(f"symmetric: {'yes' if symmetric else 'NO'}\n")
    return EXIT_OK if symmetric else EXIT_FAIL


def cmd_schroder(args, out) -> int:
    try:
        paths = enumerate_schroder(args.m, args.n, small=args.small)
    except DomainError as exc:
        raise Infeasible(str(exc)) from exc
    if args.count_only:
        out.write(f"{len(paths)}\n")
    elif args.format == "json":
        for p in paths:
            out.write(json.dumps(p.to_dict(), separators=(",", ":")) + "\n")
    else:
        for p in paths:
            out.write(p.to_text() + "\n")
    return EXIT_OK


def cmd_biject(args, out) -> int:
    if args.map == "phi":
        out.write(phi(_tableau_arg(_require(args.tableau, "--tableau"))).to_text() + "\n")
    elif args.map == "fiber":
        s = _tableau_arg(_require(args.tableau, "--tableau"))
        if not s.is_standard:
            raise UsageError("fiber expects a standard tableau")
        _emit_tableaux(phi_fiber(s, args.k), args.format, out)
    elif args.map == "path":
        if args.path:
            p = LatticePath.from_text(args.path, _require(args.m, "--m"))
            out.write(path_to_syt(p).to_text() + "\n")
        else:
            out.write(syt_to_path(_tableau_arg(_require(args.tableau, "--tableau or --path"))).to_text() + "\n")
    else:
        if args.path:
            p = SchroderPath.from_text(args.path, _require(args.m, "--m"))
            out.write(schroder_to_inc(p).to_text() + "\n")
        else:
            out.write(inc_to_schroder(_tableau_arg(_require(args.tableau, "--tableau or --path"))).to_text() + "\n")
    return EXIT_OK


def _require(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


def cmd_promote(args, out) -> int:
    if args.tableau:
        t = _tableau_arg(args.tableau)
        result = promote_power(t, args.steps)
        out.write((result.to_json() if args.format == "json" else result.to_text()) + "\n")
        return EXIT_OK
    shape = parse_shape(_require(args.shape, "--shape or --tableau"))
    tabs = cached_enumerate_inc(shape, args.k, args.cache_dir)
    if not tabs:
        raise Infeasible(f"Inc_{args.k}({shape}) is empty")
    for t in tabs:
        image = promote_power(t, args.steps)
        if args.format == "json":
            out.write(json.dumps({"tableau": t.to_text(), "image": image.to_text()}) + "\n")
        else:
            out.write(f"{t.to_text()} -> {image.to_text()}\n")
    return EXIT_OK


def cmd_orbits(args, out) -> int:
    shape = parse_shape(args.shape)
    tabs = cached_enumerate_inc(shape, args.k, args.cache_dir)
    if not tabs:
        raise Infeasible(f"Inc_{args.k}({shape}) is empty")
    orbs = orbits(tabs)
    if args.format == "text":
        for o in orbs:
            out.write(f"period {o.period}\t{o.representative.to_text()}\n")
        out.write(f"order {order_of(orbs)}\n")
    else:
        for o in orbs:
            out.write(json.dumps(o.to_dict()) + "\n")
    return EXIT_OK


def cmd_csp(args, out) -> int:
    if args.which == "rect33":
        rec = rect_counterexample()
        if args.format == "json":
            out.write(json.dumps(rec.to_dict(), indent=2) + "\n")
        else:
            out.write(f"X(q) = {rec.polynomial}\nX(1) = {rec.value_at_one}\n"
                      f"promotion order = {rec.order}\nfixed by promotion^2 = {rec.fixed_by_square}\n"
                      f"X(w^2) = {rec.value_at_omega2.describe()}\n")
            out.write(rec.report.to_table() + "\n")
        # the expected outcome is a failing CSP
        return EXIT_OK if not rec.report.overall else EXIT_FAIL
    for flag in ("N", "r", "k"):
        _require(getattr(args, flag), f"--{flag}")
    try:
        report = hook_csp_report(args.N, args.r, args.k)
    except DomainError as exc:
        raise Infeasible(str(exc)) from exc
    out.write((report.to_json() if args.format == "json" else report.to_table()) + "\n")
    return EXIT_OK if report.overall else EXIT_FAIL


def cmd_verify_all(args, out) -> int:
    results = run_all(args.max_cells, args.only)
    if args.format == "json":
        out.write(json.dumps([r.to_dict() for r in results], indent=2) + "\n")
    else:
        for r in results:
            out.write(r.line() + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tabkit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json", "csv")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--cache-dir", default=None, help="enumeration cache (default: $TABKIT_CACHE_DIR)")
        return p

    p = common(sub.add_parser("enumerate", help="list Inc_k(shape)"))
    p.add_argument("--shape", required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = common(sub.add_parser("count", help="|Inc_k(shape)| for one or all k"), ("text", "json"))
    p.add_argument("--shape", required=True)
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=cmd_count)

    p = common(sub.add_parser("narayana", help="m-Narayana row and its values at 1 and 2"), ("text", "json"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_narayana)

    p = common(sub.add_parser("schroder", help="list large or small m-Schroder paths"), ("text", "json"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--small", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_schroder)

    p = common(sub.add_parser("biject", help="apply phi, phi fibers or the path bijections"))
    p.add_argument("map", choices=["phi", "fiber", "path", "schroder"])
    p.add_argument("--tableau")
    p.add_argument("--path")
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int, default=0)
    p.set_defaults(func=cmd_biject)

    p = common(sub.add_parser("promote", help="apply K-promotion"), ("text", "json"))
    p.add_argument("--shape")
    p.add_argument("--tableau")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--steps", type=int, default=1)
    p.set_defaults(func=cmd_promote)

    p = common(sub.add_parser("orbits", help="promotion orbits of Inc_k(shape)"), ("json", "text"))
    p.add_argument("--shape", required=True)
    p.add_argument("--k", type=int, default=0)
    p.set_defaults(func=cmd_orbits)

    p = common(sub.add_parser("csp", help="cyclic sieving check"), ("text", "json"))
    p.add_argument("which", choices=["hook", "rect33"])
    p.add_argument("--N", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_csp)

    p = common(sub.add_parser("verify-all", help="run every verification criterion"), ("text", "json"))
    p.add_argument("--max-cells", type=int, default=12)
    p.add_argument("--only", default=None, help="comma-separated criterion numbers or groups")
    p.set_defaults(func=cmd_verify_all)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except TabkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Invoke the CLI in-process and capture stdout."""
    buf = io.StringIO()
    code = main(list(argv), buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
