"""Command-line driver for the cone-structure engine."""
from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from dynkin_io import (
    DiagramParseError,
    DiagramSemanticError,
    cmd_classify,
    cmd_info,
    cmd_kostant,
    cmd_nested,
    cmd_oracle,
    cmd_tables,
    maximal_node,
    parse_diagram,
    report_passed,
)
from grading import GradingError
from homology import SizeCapExceeded
from kostant import UnsupportedConfigurationError
from nested import ContractError
from rootsys import RootSystemError
from utils import ConfigError, EngineConfig, configure_logging, dump_json, load_engine_config

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 2
EXIT_USAGE = 3
EXIT_SIZE_CAP = 4

ERROR_KINDS = {
    DiagramParseError: "parse",
    DiagramSemanticError: "diagram",
    ConfigError: "config",
    ContractError: "contract",
    GradingError: "grading",
    RootSystemError: "root_system",
    UnsupportedConfigurationError: "unsupported",
}
USAGE_ERRORS = tuple(ERROR_KINDS)


def error_document(exc: Exception) -> Dict[str, Any]:
    """JSON body printed on stdout when a command is refused."""
    kind = next((name for cls, name in ERROR_KINDS.items() if isinstance(exc, cls)), "usage")
    document: Dict[str, Any] = {"error": kind, "message": str(exc)}
    if isinstance(exc, DiagramParseError):
        document["column"] = exc.column
    return document


class EngineArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with the engine's usage code."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(dump_json({"error": "usage", "message": message}))
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser(config: EngineConfig) -> EngineArgumentParser:
    parser = EngineArgumentParser(description="Crossed Dynkin diagrams, nested parabolics and Kostant checks")
    parser.add_argument(
        "--log-level",
        default=config.log_level,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Logging verbosity",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=EngineArgumentParser)

    for name, help_text in (
        ("info", "Grading, Levi type and case of a crossed diagram"),
        ("nested", "Bigrading and bracket checks of the nested pair q <= p"),
        ("kostant", "Length-2 Hasse words and their lowest-weight components"),
        ("oracle", "Brute-force Hodge decomposition against the Kostant prediction"),
    ):
        command = sub.add_parser(name, help=help_text)
        command.add_argument("diagram", help='Diagram such as "B4:**x*" or "E7" with --cross')
        command.add_argument("--cross", help="Comma-separated crossed nodes, e.g. 1 or 2,3")
        if name == "oracle":
            command.add_argument("--cap", type=int, default=config.oracle_cap, help="Chain-space size cap")
            command.add_argument("--partial", action="store_true", help="Report a partial verdict instead of refusing over the cap")
            command.add_argument("--jacobi-samples", type=int, default=config.jacobi_samples, help="Sampled Jacobi triples above rank 4")
            command.add_argument("--seed", type=int, default=config.seed, help="Seed for the sampled Jacobi triples")

    classify = sub.add_parser("classify", help="Positive homogeneities of all maximal parabolics")
    classify.add_argument("--max-rank", type=int, default=8, help="Largest rank in the sweep")
    classify.add_argument("--format", choices=["json", "text"], default="json")

    tables = sub.add_parser("tables", help="Regenerate the VMRT tables from root data")
    tables.add_argument("--table", type=int, choices=[1, 2, 3], action="append", help="Table number (repeatable)")
    tables.add_argument("--format", choices=["json", "text", "latex"], default="json")
    tables.add_argument("--fixtures", default=str(config.fixtures_path), help="Path to the fixtures JSON")
    return parser


def _print_report(report: Dict[str, Any]) -> int:
    print(dump_json(report))
    if report_passed(report):
        return EXIT_OK
    failed = [name for name, check in report["checks"].items() if check["status"] != "pass"]
    LOGGER.error("Checks failed: %s", ", ".join(failed))
    return EXIT_CHECK_FAILED


def _print_classification(report: Dict[str, Any], fmt: str) -> int:
    if fmt == "text":
        frame = pd.DataFrame(report["predictions"])
        frame["positive_homogeneities"] = frame["positive_homogeneities"].apply(
            lambda values: ",".join(map(str, values)) or "-"
        )
        print(frame.to_markdown(index=False))
        return EXIT_OK if report_passed(report) else EXIT_CHECK_FAILED
    return _print_report(report)


def _run_tables(which: Optional[List[int]], fmt: str, fixtures_path: str) -> int:
    documents, mismatches = cmd_tables(which, fmt, fixtures_path)
    for document in documents:
        print(document)
    if mismatches:
        LOGGER.error("Tables disagree with fixtures: %s", dump_json(mismatches, indent=None))
        return EXIT_CHECK_FAILED
    return EXIT_OK


def run(args: argparse.Namespace) -> int:
    if args.command == "classify":
        return _print_classification(cmd_classify(args.max_rank), args.format)
    if args.command == "tables":
        return _run_tables(args.table, args.format, args.fixtures)
    diagram = parse_diagram(args.diagram, args.cross, require_cross=True)
    if args.command == "info":
        return _print_report(cmd_info(diagram))
    node = maximal_node(diagram)
    if args.command == "nested":
        return _print_report(cmd_nested(diagram.lie_type, node))
    if args.command == "kostant":
        return _print_report(cmd_kostant(diagram.lie_type, node))
    return _print_report(
        cmd_oracle(diagram.lie_type, node, args.cap, args.partial, args.jacobi_samples, args.seed)
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        config = load_engine_config()
    except ConfigError as exc:
        LOGGER.error("Configuration error: %s", exc)
        print(dump_json(error_document(exc)))
        return EXIT_USAGE
    args = _build_parser(config).parse_args(argv)
    configure_logging(getattr(logging, args.log_level))
    try:
        return run(args)
    except SizeCapExceeded as exc:
        LOGGER.error("Refused: %s", exc)
        print(dump_json({"error": "size_cap", "required": exc.required, "cap": exc.cap}))
        return EXIT_SIZE_CAP
    except USAGE_ERRORS as exc:
        LOGGER.error("%s", exc)
        print(dump_json(error_document(exc)))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
