"""Command-line interface: ``monomial-lab <command> [options]``.

Exit codes: 0 when every asserted check passed, 1 when a check failed (a
JSON failure record is written), 2 for usage and parameter errors.
"""

import sys
from typing import List, Optional

from monomial_lab._errors import MonomialLabError
from monomial_lab._logging import enable_logging
from monomial_lab._settings import LOGGER
from monomial_lab.cli._commands import HANDLERS, CommandResult, RunConfig
from monomial_lab.cli._parser import build_parser
from monomial_lab.io import envelope, to_csv, to_json, to_jsonl, write_text

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def render(config: RunConfig, outcome: CommandResult) -> str:
    """Output text of a run; the same config always gives the same text."""
    if outcome.failed is not None:
        return to_json(envelope(config.command, outcome.failed, config.to_dict()))
    if config.format == "json":
        return to_json(envelope(config.command, outcome.result, config.to_dict()))
    rows = outcome.rows if outcome.rows is not None else [outcome.result]
    if config.format == "jsonl":
        return to_jsonl(rows)
    return to_csv(rows)


def run(config: RunConfig) -> int:
    """Execute a parsed configuration and write its artifact."""
    handler = HANDLERS[config.command.split()[0]]
    outcome = handler(config)
    write_text(render(config, outcome), config.out)
    return EXIT_CHECK_FAILED if outcome.failed is not None else EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.verbose:
        enable_logging("debug" if args.verbose > 1 else "info")
    config = RunConfig.from_namespace(args)
    try:
        return run(config)
    except (MonomialLabError, ValueError, OverflowError, RuntimeError, OSError) as e:
        LOGGER.debug("Run failed", exc_info=True)
        print(f"monomial-lab {config.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE


__all__ = ["EXIT_CHECK_FAILED", "EXIT_OK", "EXIT_USAGE", "RunConfig", "build_parser", "main", "run"]
