"""hankel-lab command line.

Exit codes: 0 success or PASS, 1 a FAIL verdict or refuted check, 2 bad input.
Integer lists are comma/whitespace separated, or ``@path`` to read a file
(``@-`` reads standard input).
"""
from __future__ import annotations

import argparse
import contextlib
import json
import re
import sys
from typing import Sequence, TextIO

from . import catalog
from .analysis import SCHEMA_VERSION, check_conjecture, eta_convolution, even_subsequence
from .contfrac import CFSpec, cf_expand, parse_signs, take
from .errors import HankelLabError
from .hankel import hankel_transform, prepend
from .pattern import b_to_p, multiplicities, p_to_b
from .reproduce import run_all

MAX_EXPAND_ORDER = 200
MAX_HANKEL_ORDER = 60


class UsageError(Exception):
    pass


def _ints(text: str, stdin: TextIO) -> list[int]:
    if text.startswith("@"):
        path = text[1:]
        if path == "-":
            text = stdin.read()
        else:
            try:
                with open(path) as fh:
                    text = fh.read()
            except OSError as exc:
                raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    parts = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    try:
        return [int(t) for t in parts]
    except ValueError:
        raise UsageError(f"not a list of integers: {text!r}") from None


def _params(pairs: Sequence[str]) -> dict[str, int]:
    out = {}
    for pair in pairs or ():
        key, sep, value = pair.partition("=")
        if not sep:
            raise UsageError(f"--param expects key=value, got {pair!r}")
        try:
            out[key] = int(value)
        except ValueError:
            raise UsageError(f"--param {key} must be an integer") from None
    return out


def _line(values) -> str:
    return ",".join(str(v) for v in values)


def _emit(out: TextIO, fmt: str, payload: dict, plain_lines: Sequence[str]):
    if fmt == "json":
        out.write(json.dumps({"schema_version": SCHEMA_VERSION, **payload}) + "\n")
    else:
        for line in plain_lines:
            out.write(line + "\n")


def _powers_arg(args, stdin):
    """Powers from --powers or --rule, as (finite list or rule, label)."""
    if args.powers is not None:
        p = _ints(args.powers, stdin)
        if not p:
            raise UsageError("empty power list")
        return p
    entry = catalog.get(args.rule)
    if entry.kind != catalog.CF_POWERS:
        raise UsageError(f"{args.rule} is a {entry.kind}, not a CF power rule")
    return catalog.rule(args.rule, **_params(args.param))


def _signs(text: str) -> tuple[int, ...]:
    try:
        return parse_signs(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_expand(args, stdin, out):
    if not 0 <= args.terms <= MAX_EXPAND_ORDER:
        raise UsageError(f"--terms must be between 0 and {MAX_EXPAND_ORDER}")
    powers = _powers_arg(args, stdin)
    signs = _signs(args.signs)
    a = cf_expand(CFSpec(powers, signs), args.terms)
    used = take(powers, len(a))
    _emit(out, args.format, {"kind": "expansion", "powers": used, "signs": list(signs), "order": args.terms, "terms": a},
          [_line(a)])
    return 0


def cmd_hankel(args, stdin, out):
    a = _ints(args.seq, stdin)
    if args.prepend:
        a = prepend(a, _ints(args.prepend, stdin))
    if args.shift < 0:
        raise UsageError("--shift must be non-negative")
    if len(a) < 1 + args.shift:
        raise UsageError(f"need at least {1 + args.shift} terms, got {len(a)}")
    top = (len(a) - 1 - args.shift) // 2
    if args.order is not None:
        if args.order > top:
            raise UsageError(f"{len(a)} terms support Hankel order {top} at most")
        top = args.order
    if top > MAX_HANKEL_ORDER:
        raise UsageError(f"Hankel order {top} exceeds {MAX_HANKEL_ORDER}; pass --order")
    h = hankel_transform(a[: 2 * top + 1 + args.shift], args.shift)
    _emit(out, args.format, {"kind": "hankel", **h.to_dict()}, [_line(h.values)])
    return 0


def cmd_p2b(args, stdin, out):
    p = _ints(args.powers, stdin)
    b = p_to_b(p)
    _emit(out, args.format, {"kind": "p2b", "powers": p, "pattern": b}, [_line(b)])
    return 0


def cmd_b2p(args, stdin, out):
    b = _ints(args.pattern, stdin)
    p = b_to_p(b)
    _emit(out, args.format, {"kind": "b2p", "pattern": b, "powers": p,
                             "multiplicities": [list(m) for m in multiplicities(b)]}, [_line(p)])
    return 0


def cmd_check(args, stdin, out):
    if not 2 <= args.order <= MAX_HANKEL_ORDER:
        raise UsageError(f"--order must be between 2 and {MAX_HANKEL_ORDER}")
    signs = _signs(args.signs)
    if args.pattern is not None:
        report = check_conjecture(pattern=_ints(args.pattern, stdin), signs=signs, order=args.order)
    elif args.rule is not None and catalog.get(args.rule).kind != catalog.CF_POWERS:
        report = check_conjecture(pattern=catalog.rule(args.rule, **_params(args.param)), signs=signs, order=args.order)
    else:
        report = check_conjecture(powers=_powers_arg(args, stdin), signs=signs, order=args.order)
    lines = [
        f"verdict: {report.verdict}",
        f"powers: {_line(report.source['values'] if report.source['kind'] == 'powers' else report.derived['values'])}",
        f"pattern: {_line(report.source['values'] if report.source['kind'] == 'pattern' else report.derived['values'])}",
        f"h: {_line(report.h.values)}",
        f"expected_support: {_line(report.expected_support)}",
        f"observed_support: {_line(report.observed_support)}",
        f"multiplicities: {_line(f'{v}x{m}' for v, m in report.multiplicities)}",
        f"nonzero_signs: {_line(report.nonzero_signs)}",
    ]
    if report.terminating:
        lines.append("note: power list ends early; checked the terminating fraction")
    _emit(out, args.format, report.to_dict(), lines)
    return 0 if report.passed else 1


def cmd_convolve(args, stdin, out):
    h = _ints(args.seq, stdin)
    e = eta_convolution(h)
    result = even_subsequence(e) if args.even else e
    _emit(out, args.format, {"kind": "eta_convolution", "h": h, "e": e, "even": even_subsequence(e)}, [_line(result)])
    return 0


def cmd_catalog(args, stdin, out):
    if args.errata:
        _emit(out, args.format, {"kind": "errata", "errata": [vars(e) for e in catalog.ERRATA]},
              [f"{e.name}\t{e.printed}\t{e.finding}" for e in catalog.ERRATA])
        return 0
    if args.name is None:
        rows = [{"name": r.name, "kind": r.kind, "description": r.description, "context": r.context, "oeis": r.oeis}
                for r in catalog.REGISTRY.values()]
        _emit(out, args.format, {"kind": "catalog", "entries": rows},
              ["\t".join(row[k] for k in ("name", "kind", "description", "context")) for row in rows])
        return 0
    if not 0 <= args.terms <= MAX_EXPAND_ORDER:
        raise UsageError(f"--terms must be between 0 and {MAX_EXPAND_ORDER}")
    terms = catalog.named_terms(args.name, args.terms, **_params(args.param))
    _emit(out, args.format, {"kind": "named_terms", "name": args.name, "terms": terms}, [_line(terms)])
    return 0


def cmd_reproduce(args, stdin, out):
    outcomes = run_all(set(args.only) if args.only else None)
    if args.format == "json":
        _emit(out, "json", {"kind": "reproduce", "criteria": [
            {"number": o.criterion.number, "title": o.criterion.title, "passed": o.passed,
             "failures": o.failures, "seconds": round(o.seconds, 3)} for o in outcomes]}, [])
    else:
        for o in outcomes:
            out.write(o.line() + "\n")
            for f in o.failures:
                out.write(f"      {f}\n")
        n_pass = sum(o.passed for o in outcomes)
        out.write(f"{n_pass}/{len(outcomes)} criteria passed\n")
    return 0 if all(o.passed for o in outcomes) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json"), default="plain")

    parser = argparse.ArgumentParser(prog="hankel-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def powers_source(p, required=True):
        g = p.add_mutually_exclusive_group(required=required)
        g.add_argument("--powers", help="CF powers p_0,p_1,...")
        g.add_argument("--rule", help="catalog entry name")
        p.add_argument("--param", action="append", metavar="KEY=VALUE", help="catalog rule parameter")

    p = sub.add_parser("expand", parents=[common], help="expand a continued fraction")
    powers_source(p)
    p.add_argument("--signs", default="-", help="sign cycle, e.g. '-' or '--++'")
    p.add_argument("--terms", type=int, required=True, help="highest index N; prints a_0..a_N")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("hankel", parents=[common], help="Hankel transform of a sequence")
    p.add_argument("--seq", required=True)
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--prepend", help="terms to put in front of the sequence")
    p.add_argument("--order", type=int, help="highest Hankel index to compute")
    p.set_defaults(func=cmd_hankel)

    p = sub.add_parser("p2b", parents=[common], help="CF powers to Hankel pattern")
    p.add_argument("--powers", required=True)
    p.set_defaults(func=cmd_p2b)

    p = sub.add_parser("b2p", parents=[common], help="Hankel pattern to CF powers")
    p.add_argument("--pattern", required=True)
    p.set_defaults(func=cmd_b2p)

    p = sub.add_parser("check", parents=[common], help="check support of h against the pattern")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--pattern")
    g.add_argument("--powers")
    g.add_argument("--rule", help="catalog CF power rule or pattern")
    p.add_argument("--param", action="append", metavar="KEY=VALUE")
    p.add_argument("--signs", default="-")
    p.add_argument("--order", type=int, required=True, help="highest Hankel index checked")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("convolve", parents=[common], help="e_n = sum h_k (-1)^(n-k) h_(n-k)")
    p.add_argument("--seq", required=True)
    p.add_argument("--even", action="store_true", help="print e_0, e_2, e_4, ... only")
    p.set_defaults(func=cmd_convolve)

    p = sub.add_parser("catalog", parents=[common], help="list or expand catalog entries")
    p.add_argument("name", nargs="?")
    p.add_argument("--terms", type=int, default=20)
    p.add_argument("--param", action="append", metavar="KEY=VALUE")
    p.add_argument("--errata", action="store_true", help="list known misprints and how they are handled")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("reproduce-paper", parents=[common], help="run every acceptance criterion")
    p.add_argument("--only", type=int, action="append", metavar="N")
    p.set_defaults(func=cmd_reproduce)

    return parser


def run(argv: Sequence[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, stdin, stdout)
    except (UsageError, HankelLabError) as exc:
        stderr.write(f"hankel-lab {args.command}: error: {exc}\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
