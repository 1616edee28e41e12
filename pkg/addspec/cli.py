"""Command line interface, ``python -m addspec``."""

import argparse
import sys
import time
from typing import List, Optional, Tuple

from loguru import logger as _logger

from addspec import __version__
from addspec.config import Settings, load_config
from addspec.constructions import ConstructionSpec, realize
from addspec.core import IntSet, r_value
from addspec.exceptions import AddSpecError, BudgetExceededError
from addspec.records import (
    RecordFormat,
    RecordKind,
    RecordLog,
    RunRecord,
    write_records,
)
from addspec.spectrum import enumerate_spectrum
from addspec.utils import format_range, parse_range
from addspec.verify import Status, conjecture_scan, known_statements, verify_statement

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

LOG_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} - {level}: {message}"

Outcome = Tuple[List[RunRecord], int]


def _elapsed_ms(t0: float) -> int:
    return int((time.perf_counter() - t0) * 1000)


def rvalue(args, settings: Settings) -> Outcome:
    t0 = time.perf_counter()
    S = IntSet.parse(args.set, settings.capacity)
    record = RunRecord.make(
        RecordKind.RVALUE, {"set": S.format()}, r_value(S), _elapsed_ms(t0)
    )
    return [record], EXIT_OK


def spectrum(args, settings: Settings) -> Outcome:
    t0 = time.perf_counter()
    result = enumerate_spectrum(
        args.s,
        args.N,
        workers=settings.workers,
        budget=settings.budget,
        capacity=settings.capacity,
        extremal_limit=args.list_extremal or settings.extremal_limit,
    )
    params = {"s": args.s, "N": args.N, "list_extremal": args.list_extremal}
    record = RunRecord.make(RecordKind.SPECTRUM, params, result, _elapsed_ms(t0))
    return [record], EXIT_OK


def _report_outcome(kind: RecordKind, params: dict, report, t0: float) -> Outcome:
    record = RunRecord.make(kind, params, report, _elapsed_ms(t0))
    code = EXIT_FAILED if report.status is Status.FAIL else EXIT_OK
    if report.status is Status.ERRATA:
        _logger.warning(
            f"{report.statement_id}: {len(report.counterexamples)} formula errata"
        )
    return [record], code


def verify(args, settings: Settings) -> Outcome:
    t0 = time.perf_counter()
    report = verify_statement(
        args.statement,
        args.s,
        workers=settings.workers,
        n_range=args.N,
        budget=settings.budget,
        capacity=settings.capacity,
        extremal_limit=settings.extremal_limit,
    )
    params = {
        "statement": args.statement,
        "s": format_range(args.s),
        "N": None if args.N is None else format_range(args.N),
    }
    return _report_outcome(RecordKind.VERIFY, params, report, t0)


def conjecture(args, settings: Settings) -> Outcome:
    t0 = time.perf_counter()
    report = conjecture_scan(
        args.s_max,
        workers=settings.workers,
        budget=settings.budget,
        capacity=settings.capacity,
    )
    return _report_outcome(RecordKind.CONJECTURE, {"s_max": args.s_max}, report, t0)


def construct(args, settings: Settings) -> Outcome:
    t0 = time.perf_counter()
    spec = ConstructionSpec.parse(args.spec)
    prediction = realize(spec, settings.capacity)
    result = prediction.to_dict()
    result["actual_r"] = r_value(prediction.set)
    record = RunRecord.make(
        RecordKind.CONSTRUCT, {"spec": spec.format()}, result, _elapsed_ms(t0)
    )
    return [record], EXIT_OK


def show(args, settings: Settings) -> Outcome:
    log = RecordLog(*args.files, remove_duplicates=not args.keep_duplicates)
    records = log.records()
    if log.errorcount:
        _logger.warning(f"{log.errorcount} line(s) could not be read")
    return records, EXIT_OK


def _add_common_arguments(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--workers",
        type=int,
        default=None,
        help="Number of worker processes. Defaults to the configured value or "
        "the number of available CPUs.",
    )
    parser.add_argument(
        "--budget",
        type=int,
        default=None,
        help="Largest number of subsets a single scan may visit (default 10**9).",
    )
    parser.add_argument(
        "--capacity",
        type=int,
        default=None,
        help="Largest integer a set may contain (default 64, at most 128).",
    )
    parser.add_argument(
        "--config", type=str, default=None, help="Path of a TOML configuration file."
    )
    parser.add_argument(
        "--format",
        choices=[f.value for f in RecordFormat],
        default=RecordFormat.TEXT.value,
        help="Output format. CSV is only available for spectrum results.",
    )
    parser.add_argument(
        "--out", type=str, default=None, help="Output file name (default stdout)."
    )
    parser.add_argument(
        "--append",
        action="store_true",
        default=False,
        help="Append to output file. By default the file is "
        "overwritten if it exists already.",
    )
    parser.add_argument(
        "--debug",
        action="store_true",
        default=False,
        help="Enable debug logging and show tracebacks.",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m addspec",
        description="Compute r-values and spectra of integer sets and verify "
        "statements about them",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=__version__)
    subparsers = parser.add_subparsers(dest="command")

    def add(name, func, help):
        sub = subparsers.add_parser(
            name, help=help, formatter_class=argparse.ArgumentDefaultsHelpFormatter
        )
        _add_common_arguments(sub)
        sub.set_defaults(func=func)
        return sub

    rv_parser = add("rvalue", rvalue, "r-value of one set")
    rv_parser.add_argument(
        "--set", required=True, type=str, help="Comma separated members, e.g. 1,2,4"
    )

    sp_parser = add("spectrum", spectrum, "Spectrum R(s, N) by exhaustive enumeration")
    sp_parser.add_argument("--s", required=True, type=int, help="Set size")
    sp_parser.add_argument("--N", required=True, type=int, help="Interval bound")
    sp_parser.add_argument(
        "--list-extremal",
        type=int,
        default=None,
        metavar="LIMIT",
        help="List up to LIMIT minimizing and maximizing sets",
    )

    ver_parser = add("verify", verify, "Verify a statement over a parameter range")
    ver_parser.add_argument(
        "--statement",
        required=True,
        type=str,
        help=f"Statement id, one of: {', '.join(known_statements())}",
    )
    ver_parser.add_argument(
        "--s", required=True, type=parse_range, help="Set sizes, e.g. 4..8"
    )
    ver_parser.add_argument(
        "--N",
        type=parse_range,
        default=None,
        help="Restrict the interval bounds, e.g. 6..12",
    )

    conj_parser = add(
        "conjecture", conjecture, "Compare the missing values of R(s, N) with the "
        "predicted ladder for all s up to s-max",
    )
    conj_parser.add_argument(
        "--s-max", required=True, type=int, help="Largest set size"
    )

    con_parser = add("construct", construct, "Realise a construction and its r-value")
    con_parser.add_argument(
        "--spec",
        required=True,
        type=str,
        help="Construction, e.g. family52:s=5,a=3,x=3",
    )

    show_parser = add("show", show, "Print records stored by earlier runs")
    show_parser.add_argument("files", type=str, nargs="+", help="Record files")
    show_parser.add_argument(
        "--keep-duplicates",
        action="store_true",
        default=False,
        help="Do not skip identical lines of overlapping files",
    )
    return parser


def _configure_logging(debug: bool):
    _logger.remove()
    _logger.add(sys.stderr, format=LOG_FORMAT, level="DEBUG" if debug else "WARNING")


def run(argv: Optional[List[str]] = None) -> int:
    """Run the command line and return the exit code.

    Exit codes: 0 success, 1 a verification failed, 2 usage, parameter,
    configuration or record error, 3 budget exceeded.
    """
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    if not argv:
        # user did not provide any arguments
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    _configure_logging(args.debug)
    csv_commands = ("spectrum", "show")
    if args.format == RecordFormat.CSV.value and args.command not in csv_commands:
        _logger.error(f"CSV output is not available for '{args.command}'")
        return EXIT_USAGE

    try:
        settings = load_config(
            args.config,
            overrides={
                "workers": args.workers,
                "budget": args.budget,
                "capacity": args.capacity,
            },
        )
        records, code = args.func(args, settings)
        write_records(records, args.out or sys.stdout, args.format, append=args.append)
    except BudgetExceededError as exc:
        _logger.error(str(exc))
        return EXIT_BUDGET
    except (AddSpecError, ValueError) as exc:
        if args.debug:
            _logger.exception(exc)
        else:
            _logger.error(str(exc))
        return EXIT_USAGE
    return code


def main():
    sys.exit(run())
