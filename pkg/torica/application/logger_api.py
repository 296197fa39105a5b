"""Application-level logging API."""

from __future__ import annotations

import logging
import sys
import time
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

from pythonjsonlogger import jsonlogger

CONSOLE_FORMAT = "%(levelname)s - %(name)s - %(message)s"
JSON_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"


class RunLogger:
    """Configures logging for one CLI run and records command durations.

    Console records go to stderr so reports on stdout stay parseable. With
    ``log_file`` set, every record is also written as one JSON object per
    line.
    """

    def __init__(self, log_level: str = "WARNING", log_file: Optional[str | Path] = None):
        self.log_level = getattr(logging, log_level.upper())
        self.log_file = Path(log_file) if log_file else None
        self._started: Dict[str, float] = {}
        self.execution_stats: Dict[str, Any] = {
            "start_time": datetime.now().isoformat(),
            "commands_completed": [],
            "commands_failed": [],
        }
        self._setup_logging()

    def _setup_logging(self) -> None:
        handlers: List[logging.Handler] = []
        console = logging.StreamHandler(sys.stderr)
        console.setFormatter(logging.Formatter(CONSOLE_FORMAT))
        console.setLevel(self.log_level)
        handlers.append(console)
        level = self.log_level
        if self.log_file is not None:
            self.log_file.parent.mkdir(parents=True, exist_ok=True)
            file_handler = logging.FileHandler(self.log_file, encoding="utf-8")
            file_handler.setFormatter(jsonlogger.JsonFormatter(JSON_FORMAT))
            file_handler.setLevel(logging.DEBUG)
            handlers.append(file_handler)
            level = logging.DEBUG
        logging.basicConfig(level=level, handlers=handlers, force=True)
        self.logger = logging.getLogger("torica")
        self.logger.debug("Run logger initialized (level=%s)", logging.getLevelName(self.log_level))

    def log_command_start(self, command: str) -> None:
        self._started[command] = time.perf_counter()
        self.logger.info("Starting command: %s", command)

    def log_command_complete(self, command: str) -> float:
        duration = time.perf_counter() - self._started.pop(command, time.perf_counter())
        self.logger.info("Completed command: %s (duration: %.2fs)", command, duration)
        self.execution_stats["commands_completed"].append(
            {"command": command, "duration": duration, "timestamp": datetime.now().isoformat()}
        )
        return duration

    def log_command_failed(self, command: str, error: BaseException) -> None:
        self._started.pop(command, None)
        self.logger.error("Failed command: %s - %s", command, error)
        self.execution_stats["commands_failed"].append(
            {
                "command": command,
                "error": type(error).__name__,
                "message": str(error),
                "timestamp": datetime.now().isoformat(),
            }
        )

    def log_execution_summary(self) -> Dict[str, Any]:
        """Emit the run summary as one structured record."""
        self.execution_stats["end_time"] = datetime.now().isoformat()
        self.logger.info("Execution summary", extra={"execution_summary": self.execution_stats})
        return self.execution_stats
