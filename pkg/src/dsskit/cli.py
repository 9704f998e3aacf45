"""Command-line front end.

Exit codes: 0 success, 1 domain failure (not a DSS, failed verification),
2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import jsonio, report
from .curve import (
    ChainCodeError,
    DigitalCurve,
    digitize_circle_boundary,
    parse_chain_code,
    serialize_chain_code,
    trace_standard_line,
)
from .maximal import extract_maximal_segments
from .stern_brocot import SbPath
from .svg import maxseg_svg, sbt_svg
from .trace import recognize_curve
from .verify import DEFAULT_SEED, SUITES

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, text: str):
    if args.output in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {args.output}: {exc.strerror}") from exc


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _read_curve(path: str) -> DigitalCurve:
    try:
        return parse_chain_code(_read_text(path))
    except ChainCodeError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def cmd_digitize(args) -> int:
    try:
        if args.shape == "line":
            curve = trace_standard_line(args.a, args.b, args.mu, args.patterns)
        else:
            curve = digitize_circle_boundary(args.radius, (args.cx, args.cy))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        _emit(args, jsonio.dumps({"start": list(curve.start), "closed": curve.closed,
                                  "codes": curve.word()}))
    else:
        _emit(args, serialize_chain_code(curve))
    return EXIT_OK


def cmd_recognize(args) -> int:
    curve = _read_curve(args.input)
    if len(curve) < 2:
        raise UsageError("curve has fewer than two points")
    trace = recognize_curve(curve)
    _emit(args, jsonio.dumps(report.trace_report(curve, trace)))
    return EXIT_OK if trace.is_dss else EXIT_DOMAIN


def cmd_maxseg(args) -> int:
    curve = _read_curve(args.input)
    try:
        rep = report.maxseg_report(curve)
    except ValueError as exc:
        print(f"dsskit: degenerate curve: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    _emit(args, jsonio.dumps(rep))
    if args.svg:
        try:
            with open(args.svg, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(maxseg_svg(curve, extract_maximal_segments(curve)))
        except OSError as exc:
            raise UsageError(f"cannot write {args.svg}: {exc.strerror}") from exc
    return EXIT_OK


_SUITE_ARGS = {
    "oracle-exhaustive": ("max_len",),
    "prop1-random": ("n", "seed"),
    "lemma2-corpus": ("rmin", "rmax"),
    "thm1-corpus": ("rmin", "rmax"),
    "eq6-corpus": ("rmin", "rmax"),
    "sbt-roundtrip": ("max_q",),
    "pattern-words": ("max_b",),
}


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    kwargs = {k: getattr(args, k) for k in _SUITE_ARGS[args.suite] if getattr(args, k) is not None}
    if args.suite == "prop1-random":
        kwargs["seed"] = DEFAULT_SEED if args.seed is None else args.seed
    res = SUITES[args.suite](**kwargs)
    if args.json:
        _emit(args, jsonio.dumps({"schema": report.VERIFY_SCHEMA, **res.as_dict()}))
    else:
        lines = [f"{'PASS' if res.passed else 'FAIL'} {res.name} cases={res.cases} failures={res.failures}"]
        lines += [f"  {e}" for e in res.examples]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if res.passed else EXIT_DOMAIN


def _parse_fraction(s: str) -> tuple[int, int]:
    try:
        z = Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a fraction: {s!r}") from exc
    if not 0 < z <= 1:
        raise UsageError(f"fraction {s} is outside (0, 1]")
    return z.numerator, z.denominator


def cmd_sbt(args) -> int:
    fracs = [_parse_fraction(s) for s in args.fractions]
    if args.trace:
        try:
            rep = json.loads(_read_text(args.trace))
        except json.JSONDecodeError as exc:
            raise UsageError(f"{args.trace}: invalid JSON ({exc.msg})") from exc
        fracs = report.slopes_of_trace(rep) + fracs
    paths = [SbPath.from_moves(report.path_of(p, q)) for p, q in fracs]
    if args.json:
        _emit(args, jsonio.dumps({"nodes": [{"fraction": f"{p}/{q}", "path": str(path)}
                                            for (p, q), path in zip(fracs, paths)]}))
    else:
        _emit(args, sbt_svg(paths))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="output file (default: stdout)")
    common.add_argument("--seed", type=int, help=f"seed for randomized suites (default {DEFAULT_SEED})")
    common.add_argument("--json", action="store_true", help="machine-readable JSON output")

    p = argparse.ArgumentParser(prog="dsskit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    dg = sub.add_parser("digitize", help="write a chain-code file")
    dsub = dg.add_subparsers(dest="shape", required=True)
    ln = dsub.add_parser("line", parents=[common], help="whole patterns of a standard line")
    ln.add_argument("--a", type=int, required=True)
    ln.add_argument("--b", type=int, required=True)
    ln.add_argument("--mu", type=int, default=0)
    ln.add_argument("--patterns", type=int, default=1)
    ci = dsub.add_parser("circle", parents=[common], help="boundary of a digitized disk")
    ci.add_argument("--radius", type=int, required=True)
    ci.add_argument("--cx", type=int, default=0)
    ci.add_argument("--cy", type=int, default=0)
    for sp in (ln, ci):
        sp.set_defaults(func=cmd_digitize)

    rc = sub.add_parser("recognize", parents=[common], help="recognition trace as JSON")
    rc.add_argument("input", help="chain-code file, or - for stdin")
    rc.set_defaults(func=cmd_recognize)

    ms = sub.add_parser("maxseg", parents=[common], help="maximal segments and common parts as JSON")
    ms.add_argument("input")
    ms.add_argument("--svg", help="also write an SVG drawing here")
    ms.set_defaults(func=cmd_maxseg)

    vf = sub.add_parser("verify", parents=[common], help="run a verification suite")
    vf.add_argument("suite", help=", ".join(SUITES))
    vf.add_argument("--max-len", type=int)
    vf.add_argument("--n", type=int)
    vf.add_argument("--max-q", type=int)
    vf.add_argument("--max-b", type=int)
    vf.add_argument("--rmin", type=int)
    vf.add_argument("--rmax", type=int)
    vf.set_defaults(func=cmd_verify)

    sb = sub.add_parser("sbt", parents=[common], help="Stern-Brocot rendering of a slope sequence")
    sb.add_argument("fractions", nargs="*", help="fractions in (0, 1], e.g. 1/2 3/5")
    sb.add_argument("--trace", help="recognition trace JSON whose slopes are drawn first")
    sb.set_defaults(func=cmd_sbt)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"dsskit: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
