"""Command-line front end.

Subcommands: ``integrate``, ``measure``, ``maximal``, ``verify``.  Output is
UTF-8 JSON (default) or CSV.  Exit codes: 0 success, 1 error (structured
JSON on stdout), 2 integration stopped at ``--m-max``, 3 verification
failures.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import math
import os
import sys
from fractions import Fraction

from .analytic import QParameter
from .integral import MAX_LEVEL, Ball, integrate, weighted_measure
from .maximal import maximal_operator
from .padic import DEFAULT_DIGITS, PadicError, PadicNumber, PrecisionContext
from .parsing import FUNCTION_GRAMMAR, ParseError, parse_function, parse_pair, parse_scalar
from .verify import SUITES, UnknownSuite, run_suite

EXIT_OK, EXIT_ERROR, EXIT_MAXLEVEL, EXIT_VERIFY = 0, 1, 2, 3


class CLIError(Exception):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CLIError("UsageError", message)


def _default_digits() -> int:
    return int(os.environ.get("VOLKENBORN_DIGITS", DEFAULT_DIGITS))


def _common(sp: argparse.ArgumentParser):
    sp.add_argument("-p", type=int, default=3, help="odd prime (default 3)")
    sp.add_argument("--digits", type=int, default=None, help="working digits N (default $VOLKENBORN_DIGITS or 32)")
    sp.add_argument("--format", choices=("json", "csv"), default="json")


def _with_params(sp: argparse.ArgumentParser, function: bool = True):
    sp.add_argument("-q", default=None, help="q as a scalar, e.g. 1+1*3^2 (default 1+p^2)")
    sp.add_argument("-w", default="1", help="weight omega as a scalar (default 1)")
    if function:
        sp.add_argument("-f", default="poly:1", help="function descriptor, see 'grammar' below")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(
        prog="volkenborn",
        description="p-adic q-integrals, weighted ball measures and the q-maximal operator.",
        epilog=FUNCTION_GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("integrate", help="deepen Riemann sums to a p-adic tolerance")
    _common(sp)
    _with_params(sp)
    sp.add_argument("--ball", default=None, help="restrict to a + p^n Z_p, given as a,n")
    sp.add_argument("--tol-exp", type=int, default=6, help="stop when the residual is <= p^-k (default 6)")
    sp.add_argument("--m-max", type=int, default=8)

    sp = sub.add_parser("measure", help="weighted measure of a ball at a fixed level")
    _common(sp)
    _with_params(sp)
    sp.add_argument("--ball", default="0,0")
    sp.add_argument("--level", type=int, default=6, help="truncation level m (default 6)")

    sp = sub.add_parser("maximal", help="maximal operator at a point")
    _common(sp)
    _with_params(sp)
    sp.add_argument("--a", type=int, default=0, help="evaluation point")
    sp.add_argument("--n-range", default="0,2", help="levels lo,hi (default 0,2)")
    sp.add_argument("--level", type=int, default=6, help="inner truncation level m (default 6)")
    sp.add_argument("--direct-denominator", action="store_true", help="sum the ball mass instead of the closed form")

    sp = sub.add_parser("verify", help="run a seeded verification suite")
    _common(sp)
    sp.add_argument("suite", help="one of: " + ", ".join(SUITES))
    sp.add_argument("--cases", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--level", type=int, default=None, help="override the suite's truncation level")
    return ap


def _ctx(args, depth: int = 4) -> PrecisionContext:
    digits = args.digits if args.digits is not None else _default_digits()
    return PrecisionContext(args.p, digits, min(depth, max(0, digits - 4)))


def _param(text: str | None, p: int, name: str) -> QParameter:
    if text is None:
        text = f"1+{p}^2"
    try:
        return QParameter(parse_scalar(text), p)
    except PadicError as exc:
        raise CLIError("DomainError", f"{name}: {exc}") from exc


def digest(x: PadicNumber) -> str:
    blob = json.dumps(x.to_json(), sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


def _exp_cell(e) -> str:
    if e is None:
        return ""
    if e == -math.inf:
        return "inf"
    return str(int(-e))


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def cmd_integrate(args) -> tuple[str, int]:
    ctx = _ctx(args)
    p = args.p
    f = parse_function(args.f, p)
    q = _param(args.q, p, "q")
    w = _param(args.w, p, "w")
    ball = None
    if args.ball is not None:
        ball = Ball(*parse_pair(args.ball, "--ball"), p)
    tol = Fraction(1, p**args.tol_exp)
    res = integrate(f, q, w, ball, tol, args.m_max, ctx)
    code = EXIT_MAXLEVEL if res.status == MAX_LEVEL else EXIT_OK
    if args.format == "csv":
        rows = [["m", "value_digest", "residual_exp"]]
        for m, v, e in res.history:
            rows.append([m, digest(v), _exp_cell(e)])
        return _csv(rows), code
    return _dump(res.to_json()), code


def cmd_measure(args) -> tuple[str, int]:
    ctx = _ctx(args)
    p = args.p
    f = parse_function(args.f, p)
    q, w = _param(args.q, p, "q"), _param(args.w, p, "w")
    ball = Ball(*parse_pair(args.ball, "--ball"), p)
    r = weighted_measure(f, w, q, ball, args.level, ctx)
    out = {"value": r.value.to_json(), "ball": ball.to_json(), "level": r.level}
    if args.format == "csv":
        return _csv([["a", "n", "m", "value_digest"], [ball.a, ball.n, r.level, digest(r.value)]]), EXIT_OK
    return _dump(out), EXIT_OK


def cmd_maximal(args) -> tuple[str, int]:
    lo, hi = parse_pair(args.n_range, "--n-range")
    ctx = _ctx(args, hi)
    p = args.p
    f = parse_function(args.f, p)
    q, w = _param(args.q, p, "q"), _param(args.w, p, "w")
    r = maximal_operator(f, w, q, args.a, (lo, hi), args.level, ctx, args.direct_denominator)
    if args.format == "csv":
        rows = [["n", "pnorm_exp", "value_digest", "error"]]
        for e in r.levels:
            if e.error is not None:
                rows.append([e.n, "", "", e.error])
            else:
                j = e.to_json()
                rows.append([e.n, "" if j["pnorm_exp"] is None else j["pnorm_exp"], digest(e.value), ""])
        return _csv(rows), EXIT_OK
    return _dump(r.to_json()), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    if args.suite not in SUITES:
        raise CLIError("UnknownSuite", f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    ctx = _ctx(args, 2)
    rep = run_suite(args.suite, args.p, args.cases, args.seed, ctx, args.level)
    code = EXIT_OK if rep.ok else EXIT_VERIFY
    if args.format == "csv":
        rows = [["identity", "p", "cases", "max_residual_exp", "failures"]]
        mx = rep.max_residual_exp
        rows.append([rep.identity, rep.p, rep.cases, "" if mx is None else mx, len(rep.failures)])
        for fl in rep.failures:
            rows.append(["failure", fl.get("case"), fl.get("check", ""), fl.get("residual_exp", ""), json.dumps(fl.get("params", fl.get("error")))])
        return _csv(rows), code
    return _dump(rep.to_json()), code


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False) + "\n"


COMMANDS = {
    "integrate": cmd_integrate,
    "measure": cmd_measure,
    "maximal": cmd_maximal,
    "verify": cmd_verify,
}


def run(argv: list[str] | None = None) -> tuple[str, int]:
    """Execute a command line; returns (stdout text, exit code)."""
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except CLIError as exc:
        kind, msg = exc.kind, str(exc)
    except ParseError as exc:
        kind, msg = "ParseError", str(exc)
    except UnknownSuite as exc:
        kind, msg = "UnknownSuite", f"unknown suite {exc.args[0]!r}"
    except PadicError as exc:
        kind, msg = type(exc).__name__, str(exc)
    except ValueError as exc:
        kind, msg = "ValueError", str(exc)
    return _dump({"error": kind, "message": msg}), EXIT_ERROR


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    if any(a in ("-h", "--help") for a in argv):
        build_parser().parse_args(argv)  # prints help and exits
    out, code = run(argv)
    sys.stdout.buffer.write(out.encode("utf-8"))
    sys.stdout.flush()
    return code
