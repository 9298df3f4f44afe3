"""Command-line front end for the matroid CSM toolkit.

This module provides the ``matroid-csm`` command. It parses matroid specs,
dispatches to the command layer and translates errors into exit codes.

Commands:
    csm: Print csm_k(M) as a canonical cycle document.
    polynomials: Print chi, chi-bar, beta, the degree polynomial and the
        g-polynomial where it is supported.
    faces: Print the f-vector of the matroid polytope.
    verify: Run a verification suite over the test catalog.

Exit codes:
    0 success, 1 verification failure, 2 usage or parse error,
    3 mathematical precondition error.

Example:
    $ python -m matroid_csm csm --matroid uniform:3,4 --k 1
    $ python -m matroid_csm verify --suite balance --max-size 6 --format table
"""

import argparse
import logging
import sys
from typing import List, Optional, Tuple

from pydantic import ValidationError

from matroid_csm import __version__
from matroid_csm.commands.csm import format_cycle_table, run_csm
from matroid_csm.commands.faces import format_faces_table, run_faces
from matroid_csm.commands.parsing import load_bases_file, load_subdivision_file
from matroid_csm.commands.polynomials import format_polynomial_table, run_polynomials
from matroid_csm.commands.verify import SUITE_MAP, format_report_table, run_suite
from matroid_csm.config import Settings, get_settings
from matroid_csm.exceptions import MatroidCSMError, SpecParseError
from matroid_csm.services.catalog import matroid_from_name
from matroid_csm.services.matroid import Matroid

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3


def _load_matroid(args: argparse.Namespace) -> Tuple[str, Matroid]:
    """Return (display name, matroid) from ``--matroid`` or ``--bases-file``."""
    if args.bases_file:
        return f"file:{args.bases_file}", load_bases_file(args.bases_file)
    return args.matroid, matroid_from_name(args.matroid)


def _emit(model, table: str, output_format: str) -> None:
    if output_format == "table":
        print(table)
    else:
        print(model.model_dump_json(indent=2))


def handle_csm(args: argparse.Namespace, settings: Settings) -> int:
    _, matroid = _load_matroid(args)
    document = run_csm(matroid, args.k)
    _emit(document, format_cycle_table(document), args.format)
    return EXIT_OK


def handle_polynomials(args: argparse.Namespace, settings: Settings) -> int:
    name, matroid = _load_matroid(args)
    report = run_polynomials(name, matroid)
    _emit(report, format_polynomial_table(report), args.format)
    return EXIT_OK


def handle_faces(args: argparse.Namespace, settings: Settings) -> int:
    name, matroid = _load_matroid(args)
    report = run_faces(name, matroid)
    _emit(report, format_faces_table(report), args.format)
    return EXIT_OK


def handle_verify(args: argparse.Namespace, settings: Settings) -> int:
    subdivision = load_subdivision_file(args.subdivision_file) if args.subdivision_file else None
    report = run_suite(
        args.suite,
        max_size=args.max_size or settings.default_max_size,
        workers=args.workers or settings.max_workers,
        subdivision=subdivision,
    )
    _emit(report, format_report_table(report), args.format)
    if not report.passed:
        logger.warning("%d of %d cases failed", report.failures, report.total)
        return EXIT_FAILED
    return EXIT_OK


def _catalog_size(text: str) -> int:
    value = int(text)
    if not 1 <= value <= 9:
        raise argparse.ArgumentTypeError(f"max size must be in 1..9, got {value}")
    return value


def _add_matroid_arguments(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--matroid",
        help="catalog name: uniform:r,m, graphic:K<n>, fano, nonfano or rank3:<m>:<lines>",
    )
    source.add_argument("--bases-file", help='JSON file {"size": m, "bases": [[...], ...]}')


def create_parser() -> argparse.ArgumentParser:
    """Create and configure the argument parser.

    Returns:
        argparse.ArgumentParser: Parser with one subcommand per command;
        each subcommand stores its handler in ``handler``.
    """
    parser = argparse.ArgumentParser(
        prog="matroid-csm",
        description="CSM cycles of matroids as balanced tropical fans",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    formatting = argparse.ArgumentParser(add_help=False)
    formatting.add_argument("--format", choices=("json", "table"), default="json")

    commands = parser.add_subparsers(dest="command", required=True)

    csm = commands.add_parser("csm", parents=[formatting], help="print csm_k(M)")
    _add_matroid_arguments(csm)
    csm.add_argument("--k", type=int, required=True, help="cycle dimension, 0..r(M)-1")
    csm.set_defaults(handler=handle_csm)

    polynomials = commands.add_parser(
        "polynomials", parents=[formatting], help="characteristic, degree and g-polynomials"
    )
    _add_matroid_arguments(polynomials)
    polynomials.set_defaults(handler=handle_polynomials)

    faces = commands.add_parser("faces", parents=[formatting], help="f-vector of Q(M)")
    _add_matroid_arguments(faces)
    faces.set_defaults(handler=handle_faces)

    verify = commands.add_parser("verify", parents=[formatting], help="run a verification suite")
    verify.add_argument("--suite", required=True, choices=sorted(SUITE_MAP))
    verify.add_argument("--max-size", type=_catalog_size, help="largest ground set in the catalog")
    verify.add_argument("--workers", type=int, help="worker threads")
    verify.add_argument("--subdivision-file", help="extra subdivision for the valuation suite")
    verify.set_defaults(handler=handle_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI and return the exit code."""
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        settings = get_settings()
    except ValidationError as exc:
        print(f"error: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(
        level=settings.effective_log_level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        return args.handler(args, settings)
    except SpecParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MatroidCSMError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
