"""Command-line entry point: `rankmet <command> ...`."""

import argparse
import asyncio
import json
import logging
import sys
from pathlib import Path
from typing import Any

from .commands import COMMANDS, CommandCollection, CommandResult
from .config import OutputFormat, RunConfig, default_budget
from .errors import RankMetError
from .serialization import dumps, to_jsonable

logger = logging.getLogger(__name__)

GLOBAL_OPTIONS = ("budget", "seed", "format", "output", "verbose", "timeout", "command")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankmet",
        description="Rank-metric codes, q-systems and minimal codes over finite fields.",
    )
    parser.add_argument("--budget", type=int, help="maximum enumeration size")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--format", choices=[fmt.value for fmt in OutputFormat], default=OutputFormat.JSON.value
    )
    parser.add_argument("--output", type=Path, help="write the report here instead of stdout")
    parser.add_argument("--timeout", type=float, help="seconds before a computation is abandoned")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.add_arguments(subparsers.add_parser(command.name, help=command.help))
    return parser


def render_text(document: Any, indent: int = 0) -> str:
    """Readable key: value lines for the text format."""
    document = to_jsonable(document)
    pad = "  " * indent
    if not isinstance(document, dict):
        return f"{pad}{json.dumps(document, sort_keys=True)}\n"
    lines = []
    for key in sorted(document):
        value = document[key]
        if isinstance(value, dict) and value:
            lines.append(f"{pad}{key}:\n{render_text(value, indent + 1)}")
        else:
            lines.append(f"{pad}{key}: {json.dumps(value, sort_keys=True)}\n")
    return "".join(lines)


def _configure_logging(verbose: int) -> None:
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def emit(result: CommandResult, config: RunConfig) -> None:
    document = result.output or {}
    text = render_text(document) if config.format == OutputFormat.TEXT else dumps(document)
    if config.output is not None:
        config.output.write_text(text)
    else:
        sys.stdout.write(text)
    if result.error:
        sys.stderr.write(f"rankmet: {result.error}\n")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        config = RunConfig(
            budget=args.budget if args.budget is not None else default_budget(),
            seed=args.seed,
            output=args.output,
            format=OutputFormat(args.format),
            timeout=args.timeout,
        )
    except RankMetError as e:
        sys.stderr.write(f"rankmet: {e.message}\n")
        return e.exit_code

    collection = CommandCollection(*(command(config) for command in COMMANDS))
    command_input = {key: value for key, value in vars(args).items() if key not in GLOBAL_OPTIONS}
    result = asyncio.run(collection.run(name=args.command, command_input=command_input))
    emit(result, config)
    return result.exit_code
