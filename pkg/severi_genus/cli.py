"""Command-line front end.

Commands:
  counts    --max D                  N_1..N_D
  genus     --max D                  g, ĝ, g̃, M per degree (+ cusp / node columns)
  canonical --n N --r R --d D        K of M_{0,n}(P^r, d) as coefficients
  verify    [--max D] [--grid-*]     every identity; exit 1 if any fails

Every command takes --format text|json|csv. Exit codes: 0 success,
1 failed verification, 2 usage error.

Usage:
    python -m app.main counts --max 8
    python -m app.main genus --max 8 --format csv
    python -m app.main canonical --n 2 --r 2 --d 2 --format json
    python -m app.main verify --max 8
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence

from . import canonical_class as cc
from . import genus_invariants as gi
from .errors import InvalidSignatureError, SeveriGenusError
from .exact_arith import format_exact
from .formatting import FORMATS, render
from .gw_counts import n_table
from .models import ModuliSignature, OutputDocument
from .verification import VerificationGrid, run_checks

log = logging.getLogger(__name__)

DEFAULT_MAX_DEGREE = 8
MAX_DEGREE_LIMIT = 200
ABSENT = "*"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def _opt(value) -> str:
    return ABSENT if value is None else format_exact(value)


# ─────────────────────────────────────────────────────────────────────────────
# COMMANDS
# ─────────────────────────────────────────────────────────────────────────────

def cmd_counts(dmax: int) -> OutputDocument:
    table = n_table(dmax)
    rows = [{"d": str(d), "N_d": str(table[d])} for d in range(1, dmax + 1)]
    return OutputDocument(command="counts", parameters={"max": str(dmax)}, rows=rows)


def cmd_genus(dmax: int) -> OutputDocument:
    table = n_table(dmax)
    rows = []
    for d in range(1, dmax + 1):
        report = gi.genus_report(d, table)
        rows.append({
            "d":                 str(d),
            "g_d":               str(report.g),
            "g_hat_d":           str(report.g_hat),
            "g_tilde_d":         str(report.g_tilde),
            "M_d":               _opt(report.M_relation),
            "N_d":               str(report.N),
            "cusps":             str(report.cusps),
            "lemma5_nodes":      str(report.lemma5_nodes),
            "hat_nodes":         _opt(report.hat_nodes),
            "M_closed_form":     _opt(report.M_closed_form),
            "closed_form_ratio": _opt(report.closed_form_ratio),
        })
    return OutputDocument(command="genus", parameters={"max": str(dmax)}, rows=rows)


def cmd_canonical(n: int, r: int, d: int) -> OutputDocument:
    """Raises InvalidSignatureError for a bad (n, r, d)."""
    signature = ModuliSignature(n=n, r=r, d=d)
    expansion = cc.canonical_class(signature)
    rows = [
        {"divisor": "H", "i": ABSENT, "j": ABSENT, "coefficient": format_exact(expansion.h_coeff)},
        {"divisor": "L_p", "i": ABSENT, "j": ABSENT, "coefficient": format_exact(expansion.l_coeff)},
    ]
    for key, coeff in expansion.sorted_boundary():
        rows.append({"divisor": key.label(), "i": str(key.i), "j": str(key.j),
                     "coefficient": format_exact(coeff)})
    return OutputDocument(
        command="canonical",
        parameters={k: str(v) for k, v in signature.to_dict().items()},
        rows=rows,
        warnings=[f"{code}: {cc.WARNING_TEXT[code]}" for code in expansion.warnings],
    )


def closed_form_ratio_rows(dmax: int) -> list[dict[str, str]]:
    """Reported, not asserted: the printed M_d closed form against M_d."""
    table = n_table(dmax)
    rows = []
    for d in range(3, dmax + 1):
        M = gi.m_via_relation(d, table)
        closed = gi.m_closed_form(d, table)
        rows.append({
            "d":                 str(d),
            "M_d":               str(M),
            "M_closed_form":     format_exact(closed),
            "closed_form_ratio": _opt(closed / M if M else None),
        })
    return rows


def cmd_verify(dmax: int, grid: VerificationGrid) -> OutputDocument:
    verdicts = run_checks(dmax, grid)
    return OutputDocument(
        command="verify",
        parameters={
            "max": str(dmax),
            "grid_n": str(grid.n_max),
            "grid_r": str(grid.r_max),
            "grid_d": str(grid.d_max),
        },
        rows=closed_form_ratio_rows(dmax),
        verdicts=verdicts,
    )


# ─────────────────────────────────────────────────────────────────────────────
# ARGUMENT PARSING
# ─────────────────────────────────────────────────────────────────────────────

def _bounded_int(lowest: int, highest: int | None = None):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if value < lowest or (highest is not None and value > highest):
            upper = highest if highest is not None else "inf"
            raise argparse.ArgumentTypeError(f"{value} outside {lowest}..{upper}")
        return value
    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="severi-genus",
        description="Exact N_d, Severi-curve genera and canonical classes of M_0,n(P^r,d).",
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    degree = _bounded_int(1, MAX_DEGREE_LIMIT)
    grid = VerificationGrid()

    p = sub.add_parser("counts", help="N_d for d = 1..max")
    p.add_argument("--max", type=degree, required=True, dest="dmax")
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("genus", help="genus table for d = 1..max")
    p.add_argument("--max", type=degree, required=True, dest="dmax")
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("canonical", help="canonical class of M_0,n(P^r,d)")
    p.add_argument("--n", type=_bounded_int(0), required=True)
    p.add_argument("--r", type=_bounded_int(2), required=True)
    p.add_argument("--d", type=_bounded_int(0), required=True)
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("verify", help="run every consistency check")
    p.add_argument("--max", type=degree, default=DEFAULT_MAX_DEGREE, dest="dmax")
    p.add_argument("--grid-n", type=_bounded_int(0), default=grid.n_max)
    p.add_argument("--grid-r", type=_bounded_int(2), default=grid.r_max)
    p.add_argument("--grid-d", type=_bounded_int(1), default=grid.d_max)
    p.add_argument("--format", choices=FORMATS, default="text")

    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if verbose else logging.WARNING,
        format="[%(module)s] %(message)s",
        force=True,
    )


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse has already printed the usage message.
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    _configure_logging(args.verbose)

    # Exit codes: 2 for anything the user typed wrong (argparse above, or an
    # (n, r, d) with no moduli space), 1 for a failed check or a formula that
    # produced a non-integral genus, 0 otherwise.
    try:
        if args.command == "counts":
            document = cmd_counts(args.dmax)
        elif args.command == "genus":
            document = cmd_genus(args.dmax)
        elif args.command == "canonical":
            document = cmd_canonical(args.n, args.r, args.d)
        else:
            grid = VerificationGrid(n_max=args.grid_n, r_max=args.grid_r, d_max=args.grid_d)
            document = cmd_verify(args.dmax, grid)
    except InvalidSignatureError as exc:
        parser.print_usage(sys.stderr)
        log.error("invalid signature: %s", exc)
        return EXIT_USAGE
    except SeveriGenusError as exc:
        # A formula produced an impossible value: report it like a failed check.
        log.error("%s", exc)
        return EXIT_VERIFY_FAILED

    # Warnings go to stderr through logging; stdout carries only the document.
    for warning in document.warnings:
        log.warning("%s", warning)
    sys.stdout.write(render(document, args.format))

    if args.command == "verify" and not document.all_passed:
        return EXIT_VERIFY_FAILED
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(run())
