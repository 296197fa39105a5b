#!/usr/bin/env python3
"""torica - command-line entry point."""

from __future__ import annotations

import logging
import sys
from typing import Optional, Sequence

from torica.adapters.cli_user_interface_adapter import CLIUserInterfaceAdapter
from torica.application.cli_parser import build_parser
from torica.application.commands import execute
from torica.application.container import build_container
from torica.application.logger_api import RunLogger
from torica.domain.exceptions import ToricaError

logger = logging.getLogger(__name__)

# sysexits EX_SOFTWARE
EXIT_INTERNAL_ERROR = 70


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run one command and return its exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    run_logger = RunLogger("DEBUG" if args.verbose else "WARNING", log_file=args.log_file)
    try:
        container = build_container(args)
    except ToricaError as exc:
        CLIUserInterfaceAdapter().error(f"{type(exc).__name__}: {exc}")
        return exc.exit_code
    try:
        return execute(container, run_logger)
    except KeyboardInterrupt:
        container.ui.error("interrupted")
        return 130
    except Exception as exc:
        logger.exception("Unexpected error")
        container.ui.error(f"unexpected error: {exc}")
        return EXIT_INTERNAL_ERROR
    finally:
        run_logger.log_execution_summary()


if __name__ == "__main__":
    sys.exit(main())
