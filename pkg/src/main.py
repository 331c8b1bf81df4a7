"""Command-line front end: per-graph reports, enumeration and verification."""

import argparse
import json
import logging
import os
import sys
from collections.abc import Iterable, Sequence
from contextlib import AbstractContextManager, ExitStack, nullcontext
from typing import Any, NoReturn, TextIO

from dotenv import load_dotenv
from joblib import Parallel, delayed

from src.config import get_settings
from src.models.errors import ErrorCode, ErrorRecord
from src.models.report import Flag, GraphReport, MatchRecord
from src.services.builders import GraphKind, build
from src.services.characterize import classify
from src.services.export import BaseReportWriter, get_writer
from src.services.generate import enumerate_n_minus_3
from src.services.graph6 import parse_graph6, read_graph6_stream, to_graph6
from src.services.metrics import diameter, is_connected
from src.services.resolving import metric_dimension, metric_dimension_naive, verify_bounds
from src.services.twins import twin_decomposition
from src.services.verification import ground_truth_stream, run_verification
from src.utils.exceptions import GraphToolError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COUNTEREXAMPLE = 2
EXIT_IO = 3

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]

COLUMNS: dict[str, list[str]] = {
    "dim": ["line", "graph6", "n", "diameter", "beta", "flags"],
    "basis": ["line", "graph6", "n", "diameter", "beta", "basis", "flags"],
    "twin": ["line", "graph6", "n", "twinClasses", "quotient", "alpha"],
    "classify": [
        "line",
        "graph6",
        "n",
        "diameter",
        "matches",
        "predictedBeta",
        "consistent",
        "flags",
    ],
}
ERROR_COLUMNS = ["line", "code", "message", "details"]


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with EXIT_USAGE."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def configure_logging(level: str) -> None:
    """Send log records to stderr; stdout carries the data."""
    logging.basicConfig(
        level=level.upper(),
        format=LOG_FORMAT,
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )


def graph_report(
    command: str, line: int, text: str, naive: bool = False, cap: int | None = None
) -> GraphReport | ErrorRecord:
    """
    Build the report of one graph6 line for a per-graph command.

    Errors raised by the services become an ErrorRecord for the line.
    """
    try:
        g = parse_graph6(text)
        report = GraphReport(line=line, graph6=text, n=g.n)

        if command == "twin":
            td = twin_decomposition(g)
            report.twin_classes = td.summary()
            report.quotient = to_graph6(td.quotient)
            report.alpha = td.alpha
            return report

        report.diameter = diameter(g) if is_connected(g) else None

        if command in ("dim", "basis"):
            search = metric_dimension_naive if naive else metric_dimension
            result = search(g, cap)
            report.beta = result.beta
            if command == "basis":
                report.basis = list(result.basis)
            if g.n >= 2 and not verify_bounds(g, result):
                report.flags = [Flag.VIOLATION]
                logger.warning(f"line {line}: beta={result.beta} violates the bounds")
            return report

        classification = classify(g)
        report.matches = [
            MatchRecord(
                structure=m.structure.value,
                predicted_beta=m.predicted_beta,
                roles=m.roles or None,
                params=m.params or None,
            )
            for m in classification.matches
        ]
        report.predicted_beta = classification.predicted_beta
        report.consistent = classification.consistent
        if not classification.consistent:
            report.flags = [Flag.INCONSISTENT]
        return report
    except GraphToolError as e:
        return e.to_record(line)


def _dump(record: GraphReport | ErrorRecord) -> dict[str, Any]:
    return record.model_dump(by_alias=True, exclude_none=True, mode="json")


def _emit(out: TextIO, text: str) -> None:
    out.write(f"{text}\n")
    out.flush()


def _emit_error(writer: BaseReportWriter, output_format: str, record: ErrorRecord) -> None:
    """Error records go to stdout in JSON mode and to stderr otherwise."""
    if output_format == "json":
        _emit(sys.stdout, writer.row(ERROR_COLUMNS, _dump(record)))
    else:
        _emit(sys.stderr, json.dumps(_dump(record), separators=(",", ":")))


def _open_input(path: str) -> AbstractContextManager[TextIO]:
    """Open a graph6 source; "-" is stdin, which is left open on exit."""
    if path == "-":
        return nullcontext(sys.stdin)
    return open(path, encoding="utf-8")


def _io_error(path: str, error: OSError) -> int:
    """Report an unreadable input on stderr; line 0 stands for the whole input."""
    logger.error(f"I/O error on {path}: {error}")
    record = ErrorRecord(
        line=0,
        code=ErrorCode.IO_ERROR,
        message=f"cannot read {path}: {error.strerror or error}",
        details={"path": path},
    )
    _emit(sys.stderr, json.dumps(_dump(record), separators=(",", ":")))
    return EXIT_IO


def _jobs(args: argparse.Namespace) -> int:
    jobs = args.jobs if args.jobs is not None else get_settings().jobs
    return jobs if jobs is not None else -1


def _run_graph_command(args: argparse.Namespace, items: Iterable[tuple[int, str]]) -> None:
    output_format = args.format or get_settings().output_format
    writer = get_writer(output_format)
    columns = COLUMNS[args.command]
    head = writer.header(columns)
    if head is not None:
        _emit(sys.stdout, head)

    naive = getattr(args, "naive", False)
    cap = getattr(args, "cap", None)
    outcomes = Parallel(n_jobs=_jobs(args), return_as="generator")(
        delayed(graph_report)(args.command, line, text, naive, cap) for line, text in items
    )
    for outcome in outcomes:
        if isinstance(outcome, ErrorRecord):
            _emit_error(writer, output_format, outcome)
        else:
            _emit(sys.stdout, writer.row(columns, _dump(outcome)))


def cmd_graphs(args: argparse.Namespace) -> int:
    """dim, basis, twin and classify: one report line per input graph."""
    try:
        with _open_input(args.input) as handle:
            _run_graph_command(args, read_graph6_stream(handle))
    except OSError as e:
        return _io_error(args.input, e)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    """Emit every order-n graph with β = n-3, sorted graph6, one per line."""
    try:
        forms = enumerate_n_minus_3(args.n, n_jobs=_jobs(args))
    except GraphToolError as e:
        logger.error(f"{e.code.value}: {e.message}")
        return EXIT_USAGE
    for form in forms:
        _emit(sys.stdout, form)
    logger.info(f"{len(forms)} graphs of order {args.n} with metric dimension {args.n - 3}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """
    Check every family prediction against the oracle.

    Exits with EXIT_COUNTEREXAMPLE when any graph fails a check; the
    summary is always the last stdout line.
    """
    settings = get_settings()
    quiet = args.quiet or settings.quiet
    try:
        with ExitStack() as stack:
            if args.stream is not None:
                handle = stack.enter_context(_open_input(args.stream))
                items: Iterable[tuple[int, str]] = read_graph6_stream(handle)
                total = None
            else:
                max_n = args.max_n if args.max_n is not None else settings.verify_max_n
                if not 2 <= max_n <= settings.verify_max_n:
                    logger.error(
                        f"--max-n must be in 2..{settings.verify_max_n}; "
                        "use --stream for larger orders"
                    )
                    return EXIT_USAGE
                items = list(ground_truth_stream(max_n))
                total = len(items)
            summary, errors = run_verification(
                items, n_jobs=_jobs(args), progress=not quiet, total=total
            )
    except OSError as e:
        return _io_error(args.stream, e)

    for record in errors:
        _emit(sys.stdout, json.dumps(_dump(record), separators=(",", ":")))
    _emit(sys.stdout, json.dumps(summary.to_record(), separators=(",", ":")))
    return EXIT_OK if summary.passed else EXIT_COUNTEREXAMPLE


def cmd_build(args: argparse.Namespace) -> int:
    """Print the graph6 of a named construction."""
    try:
        g = build(args.kind, args.params)
    except GraphToolError as e:
        logger.error(f"{e.code.value}: {e.message}")
        return EXIT_USAGE
    _emit(sys.stdout, to_graph6(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--jobs", type=int, default=None, help="Worker count (default: all CPUs)")
    common.add_argument("--quiet", action="store_true", help="No progress bar")
    common.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        default=None,
        help="Logging level (default: WARNING)",
    )

    parser = _Parser(
        prog="metric-dim",
        description="Metric dimension of small graphs and the n-3 characterization.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("dim", "Metric dimension of each graph6 line"),
        ("basis", "Metric dimension and a lexicographically first basis"),
        ("twin", "Twin classes, types and twin graph"),
        ("classify", "Characterizations matched and predicted metric dimension"),
    ):
        p = subparsers.add_parser(name, help=help_text, parents=[common])
        p.add_argument("input", nargs="?", default="-", help="graph6 file (default: stdin)")
        p.add_argument("--format", choices=["json", "tsv"], default=None, help="Output format")
        if name in ("dim", "basis"):
            p.add_argument("--cap", type=int, default=None, help="Vertex cap for the search")
            p.add_argument("--naive", action="store_true", help="Use the unpruned search")
        p.set_defaults(handler=cmd_graphs)

    p_enum = subparsers.add_parser(
        "enumerate", help="All order-n graphs with metric dimension n-3", parents=[common]
    )
    p_enum.add_argument("--n", type=int, required=True, help="Order, at least 4")
    p_enum.set_defaults(handler=cmd_enumerate)

    p_verify = subparsers.add_parser(
        "verify", help="Check the characterizations against the oracle", parents=[common]
    )
    source = p_verify.add_mutually_exclusive_group()
    source.add_argument("--max-n", type=int, default=None, help="Self-enumerate orders 2..N")
    source.add_argument("--stream", default=None, help="graph6 file of graphs to check")
    p_verify.set_defaults(handler=cmd_verify)

    p_build = subparsers.add_parser("build", help="graph6 of a named graph", parents=[common])
    p_build.add_argument("kind", choices=[k.value for k in GraphKind])
    p_build.add_argument("params", type=int, nargs="*", help="Size parameters")
    p_build.set_defaults(handler=cmd_build)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    load_dotenv()
    args = build_parser().parse_args(argv)
    level = (
        args.log_level
        or os.getenv("METRIC_DIM_LOG_LEVEL")
        or os.getenv("LOG_LEVEL")
        or get_settings().log_level
    )
    try:
        configure_logging(level)
    except ValueError:
        sys.stderr.write(f"metric-dim: error: unknown log level {level!r}\n")
        return EXIT_USAGE
    handler = args.handler
    code: int = handler(args)
    return code


if __name__ == "__main__":
    sys.exit(main())
