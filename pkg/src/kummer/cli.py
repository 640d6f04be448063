"""Command line entry point: ``kummer scan --from A --to B``."""

from __future__ import annotations

import argparse
import logging
import sys

from kummer import __version__
from kummer.classnumber import ExactnessError, InsufficientPrecision, RouteDisagreement
from kummer.scanner import UsageError, emit, scan

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CONSISTENCY = 3
EXIT_IO = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kummer", description="Regular-prime sweeps by two exact routes.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("scan", help="classify every prime in a range")
    s.add_argument("--from", dest="start", type=int, required=True, help="lower bound (>= 5)")
    s.add_argument("--to", dest="stop", type=int, required=True, help="upper bound, inclusive")
    s.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--out", default=None, help="output file (default stdout)")
    s.add_argument("--cache", default=None, help="cache directory")
    s.add_argument("--verify-numeric", action="store_true", help="also run the numeric h^- route")
    s.add_argument("--precision-bits", type=int, default=192, help="precision for --verify-numeric")
    s.add_argument("--timings", action="store_true", help="include per-route timings (not reproducible)")
    s.add_argument("--figure", default=None, help="also render a PNG/PDF/SVG summary figure here")
    s.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")

    try:
        if args.precision_bits < 53:
            raise UsageError("--precision-bits must be at least 53")
        reports = scan(
            args.start,
            args.stop,
            jobs=args.jobs,
            cache_dir=args.cache,
            verify_numeric=args.verify_numeric,
            precision_bits=args.precision_bits,
        )
        emit(reports, args.format, args.out, timings=args.timings)
        if args.figure:
            from kummer.plotting import save_scan_figure

            save_scan_figure(reports, args.figure)
    except UsageError as exc:
        print(f"kummer: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RouteDisagreement, ExactnessError, InsufficientPrecision) as exc:
        print(f"kummer: consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except OSError as exc:
        print(f"kummer: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
