"""Command-line interface: ``lerchkit eval | verify | table | cases``.

Exit status: 0 success, 1 evaluation failure or a failing ACTIVE case,
2 usage or parse error (including unknown case ids), 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from dataclasses import replace

from .errors import LerchkitError
from .lerch import phi, phi_sderiv
from .numeric import DEFAULT_OPTIONS
from .polylog import polylog
from .special import digamma, gamma, hurwitz_zeta, stieltjes
from .suite.cases import list_cases
from .suite.runner import UnknownCaseError, run_suite
from .suite.table import build_table, render_table, table_ok

EXIT_OK, EXIT_EVAL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
DEFAULT_SEED = 42

_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_LITERAL = re.compile(rf"^(?P<re>[+-]?{_NUM})(?:(?P<im>[+-]{_NUM})i)?$")
_IMAG_ONLY = re.compile(rf"^(?P<im>[+-]?{_NUM})i$")

FUNCTIONS = {
    # name: required arguments
    "phi": ("z", "s", "v"),
    "phi-deriv": ("z", "s", "v", "order"),
    "hurwitz": ("s", "a"),
    "polylog": ("s", "z"),
    "digamma": ("z",),
    "gamma": ("z",),
    "stieltjes": ("n",),  # --a defaults to 1
}


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    """Parse ``re[(+|-)imi]`` (or a bare ``imi``); NaN and Inf are rejected."""
    t = text.strip().replace(" ", "")
    m = _LITERAL.match(t)
    if m:
        return complex(float(m["re"]), float(m["im"]) if m["im"] else 0.0)
    m = _IMAG_ONLY.match(t)
    if m:
        return complex(0.0, float(m["im"]))
    raise argparse.ArgumentTypeError(f"invalid complex literal {text!r}")


def _real(x: float, digits: int) -> str:
    out = f"{x:.{digits}g}" if digits else repr(float(x))
    if not math.isfinite(float(out)):
        out = repr(float(x))  # rounding near the top of the range overflowed
    if not any(c in out for c in ".e"):
        out += ".0"
    return out


def format_complex(z: complex, digits: int = 10) -> str:
    """Literal in the grammar :func:`parse_complex` accepts.

    ``digits=0`` prints the shortest form that round-trips exactly.
    """
    z = complex(z)
    re_part = _real(z.real + 0.0, digits)
    if z.imag == 0:
        return re_part
    im_part = _real(z.imag, digits)
    if not im_part.startswith("-"):
        im_part = "+" + im_part
    return f"{re_part}{im_part}i"


def _seed_default() -> int:
    raw = os.environ.get("LERCHKIT_SEED")
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"LERCHKIT_SEED must be an integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lerchkit", description="Hurwitz-Lerch zeta evaluation and identity checks")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate one function")
    ev.add_argument("function", choices=sorted(FUNCTIONS))
    for name in ("z", "s", "v", "a"):
        ev.add_argument(f"--{name}", type=parse_complex)
    ev.add_argument("--order", type=int)
    ev.add_argument("--n", type=int)
    ev.add_argument("--tol", type=float, help="absolute and relative tolerance")
    ev.add_argument("--format", choices=("text", "json"), default="text")

    ve = sub.add_parser("verify", help="run the identity suite")
    pick = ve.add_mutually_exclusive_group()
    pick.add_argument("--all", action="store_true", help="every case (the default)")
    pick.add_argument("--filter", default=None, help="case id or glob, e.g. I14 or 'I1*'")
    ve.add_argument("--samples", type=int, default=25)
    ve.add_argument("--seed", type=int, default=None, help="default: $LERCHKIT_SEED or 42")
    ve.add_argument("--regime", choices=("complex", "real"), default="complex",
                    help="'real' samples real m for the cases that offer it")
    ve.add_argument("--tol", type=float, help="override every case's residual bound")
    ve.add_argument("--format", choices=("text", "json", "csv"), default="text")
    ve.add_argument("--output", "-o")

    ta = sub.add_parser("table", help="check the closed-form evaluation table")
    ta.add_argument("--format", choices=("text", "json", "csv"), default="text")
    ta.add_argument("--output", "-o")

    ca = sub.add_parser("cases", help="list the identity cases")
    ca.add_argument("--format", choices=("text", "json", "csv"), default="text")
    ca.add_argument("--output", "-o")
    return parser


def _emit(text: str, path: str | None) -> int:
    if path is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_eval(args) -> int:
    need = FUNCTIONS[args.function]
    missing = [n for n in need if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.function} needs " + ", ".join(f"--{n}" for n in missing))
    opts = DEFAULT_OPTIONS if args.tol is None else replace(DEFAULT_OPTIONS, abs_tol=args.tol, rel_tol=args.tol)
    err, strategy = None, None
    f = args.function
    if f == "phi":
        res = phi(args.z, args.s, args.v, opts)
        value, err, strategy = res.value, res.err_estimate, str(res.strategy)
    elif f == "phi-deriv":
        value = phi_sderiv(args.z, args.s, args.v, args.order, opts)
    elif f == "hurwitz":
        value = hurwitz_zeta(args.s, args.a, opts)
    elif f == "polylog":
        value = polylog(args.s, args.z, opts)
    elif f == "digamma":
        value = digamma(args.z)
    elif f == "gamma":
        value = gamma(args.z)
    else:
        value = stieltjes(args.n, args.a if args.a is not None else 1.0, opts)
    if args.format == "json":
        doc = {"function": f, "value": format_complex(value, 0), "re": value.real, "im": value.imag,
               "err_estimate": err, "strategy": strategy}
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
        return EXIT_OK
    line = format_complex(value)
    if err is not None:
        line += f" (±{err:.1e})"
    if strategy is not None:
        line += f" [{strategy}]"
    print(line)
    return EXIT_OK


def cmd_verify(args) -> int:
    seed = args.seed if args.seed is not None else _seed_default()
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    pattern = "*" if args.all or args.filter is None else args.filter
    report = run_suite(pattern, args.samples, seed, DEFAULT_OPTIONS, args.regime, tolerance=args.tol)
    text = {"json": report.to_json, "csv": report.to_csv, "text": report.to_text}[args.format]()
    status = _emit(text, args.output)
    if status != EXIT_OK:
        return status
    return EXIT_OK if report.ok else EXIT_EVAL


def cmd_table(args) -> int:
    rows = build_table(DEFAULT_OPTIONS)
    status = _emit(render_table(rows, args.format), args.output)
    if status != EXIT_OK:
        return status
    return EXIT_OK if table_ok(rows) else EXIT_EVAL


def cmd_cases(args) -> int:
    records = [{
        "id": c.id,
        "title": c.title,
        "status": c.status.value,
        "tol_class": c.tol_class.value,
        "params": {p.name: p.domain.describe() for p in c.params},
        "quarantine_note": c.quarantine_note,
        "note": c.note,
    } for c in list_cases()]
    if args.format == "json":
        text = json.dumps(records, indent=2) + "\n"
    elif args.format == "csv":
        text = "id,status,tol_class\n" + "".join(f"{r['id']},{r['status']},{r['tol_class']}\n" for r in records)
    else:
        text = "".join(f"{r['id']:32s} {r['status']:11s} {r['tol_class']:8s} {r['title']}\n" for r in records)
    return _emit(text, args.output)


COMMANDS = {"eval": cmd_eval, "verify": cmd_verify, "table": cmd_table, "cases": cmd_cases}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, UnknownCaseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LerchkitError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_EVAL


if __name__ == "__main__":
    sys.exit(main())
