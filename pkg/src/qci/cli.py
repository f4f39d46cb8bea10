"""Command-line front end.

Subcommands: analyze-curve, analyze-qci, hilbert, sweep.  Exit codes are a
contract: 0 success (refusals and smooth verdicts included), 2 input parse
error, 3 guard violation, 4 internal invariant failure.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .core import QciInput, analyze_qci
from .curve import CurveInput, analyze_curve, family
from .errors import GuardError, InternalError, PolyParseError
from .linalg import PrimeField
from .poly import parse_poly
from .report import (
    curve_csv_row,
    curve_document,
    document_json,
    hilbert_document,
    qci_document,
    render_text,
    sweep_csv,
)

_FAMILY_MAP = {
    "lines": "lines_through_point",
    "smooth-plus-line": "smooth_plus_line",
}


def _parse_range(text: str) -> tuple[int, int]:
    head, sep, tail = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(
            f"range must look like A..B, got {text!r}"
        )
    try:
        lo, hi = int(head), int(tail)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"range endpoints must be integers, got {text!r}"
        ) from None
    return lo, hi


def _add_common(sub: argparse.ArgumentParser, with_json: bool = True) -> None:
    sub.add_argument("--prime", type=int, default=32003, help="field characteristic")
    if with_json:
        sub.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sub.add_argument("--out", type=str, default=None, help="write output to this path")
    sub.add_argument(
        "--max-window-extensions",
        type=int,
        default=2,
        help="extra plateau-window growth steps before giving up",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qci",
        description=(
            "Invariants of three-form ideals in the projective plane and of "
            "the singular schemes of plane curves"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_curve = sub.add_parser("analyze-curve", help="analyze a reduced plane curve")
    p_curve.add_argument("--f", required=True, help="curve equation")
    _add_common(p_curve)

    p_qci = sub.add_parser("analyze-qci", help="analyze a triple of forms")
    p_qci.add_argument("--fa", required=True)
    p_qci.add_argument("--fb", required=True)
    p_qci.add_argument("--fc", required=True)
    _add_common(p_qci)

    p_hilb = sub.add_parser("hilbert", help="quotient Hilbert and syzygy tables")
    p_hilb.add_argument("--fa", required=True)
    p_hilb.add_argument("--fb", required=True)
    p_hilb.add_argument("--fc", required=True)
    _add_common(p_hilb)

    p_sweep = sub.add_parser("sweep", help="run a witness family over a degree range")
    p_sweep.add_argument(
        "--family", required=True, choices=sorted(_FAMILY_MAP), help="family name"
    )
    p_sweep.add_argument(
        "--d-range", required=True, type=_parse_range, help="degree range A..B"
    )
    p_sweep.add_argument("--jobs", type=int, default=1, help="parallel workers")
    _add_common(p_sweep, with_json=False)
    return parser


def _emit(payload: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(payload)
    else:
        Path(out).write_text(payload, encoding="utf-8")


def _sweep_worker(task: tuple[str, int, int, int]) -> list[str]:
    family_name, d, prime, max_ext = task
    try:
        field = PrimeField(prime)
        C = family(_FAMILY_MAP[family_name], field, d=d)
        rep = analyze_curve(C, max_extensions=max_ext)
    except (GuardError, PolyParseError) as exc:
        return [family_name, str(d), str(prime), "", "", "", "", "", "", f"error: {exc}"]
    return curve_csv_row(family_name, d, prime, rep)


def _run_sweep(args) -> int:
    lo, hi = args.d_range
    tasks = [
        (args.family, d, args.prime, args.max_window_extensions)
        for d in range(lo, hi + 1)
    ]
    if args.jobs > 1 and tasks:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_sweep_worker, tasks))
    else:
        rows = [_sweep_worker(t) for t in tasks]
    _emit(sweep_csv(rows), args.out)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "sweep":
            return _run_sweep(args)
        field = PrimeField(args.prime)
        max_ext = args.max_window_extensions
        if args.command == "analyze-curve":
            f = parse_poly(args.f, field)
            rep = analyze_curve(CurveInput(f), max_extensions=max_ext)
            doc = curve_document(rep, args.f)
        elif args.command == "analyze-qci":
            fa = parse_poly(args.fa, field)
            fb = parse_poly(args.fb, field)
            fc = parse_poly(args.fc, field)
            degrees = (fa.degree, fb.degree, fc.degree)
            rep = analyze_qci(QciInput.of(fa, fb, fc), max_extensions=max_ext)
            doc = qci_document(rep, args.fa, args.fb, args.fc, degrees)
        else:
            fa = parse_poly(args.fa, field)
            fb = parse_poly(args.fb, field)
            fc = parse_poly(args.fc, field)
            degrees = (fa.degree, fb.degree, fc.degree)
            rep = analyze_qci(QciInput.of(fa, fb, fc), max_extensions=max_ext)
            doc = hilbert_document(rep, args.fa, args.fb, args.fc, degrees)
    except PolyParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4
    payload = document_json(doc) if getattr(args, "json", False) else render_text(doc)
    _emit(payload, args.out)
    return 0


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
