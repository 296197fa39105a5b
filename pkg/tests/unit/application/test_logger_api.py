"""Unit tests for RunLogger."""

import json
import logging
from pathlib import Path

import pytest

from torica.application.logger_api import RunLogger


@pytest.fixture(autouse=True)
def reset_logging():
    yield
    root = logging.getLogger()
    for handler in list(root.handlers):
        handler.close()
        root.removeHandler(handler)


class TestRunLogger:
    def test_level(self):
        assert RunLogger("debug").log_level == logging.DEBUG
        assert RunLogger().log_level == logging.WARNING

    def test_command_bookkeeping(self):
        run_logger = RunLogger()
        run_logger.log_command_start("fan check")
        duration = run_logger.log_command_complete("fan check")
        assert duration >= 0
        run_logger.log_command_start("hodge")
        run_logger.log_command_failed("hodge", ValueError("boom"))
        summary = run_logger.log_execution_summary()
        assert [c["command"] for c in summary["commands_completed"]] == ["fan check"]
        assert summary["commands_failed"][0]["error"] == "ValueError"
        assert summary["commands_failed"][0]["message"] == "boom"
        assert "end_time" in summary

    def test_json_lines_file(self, tmp_path: Path):
        log_file = tmp_path / "logs" / "run.jsonl"
        run_logger = RunLogger(log_file=log_file)
        run_logger.log_command_start("fan check")
        run_logger.log_command_complete("fan check")
        run_logger.log_execution_summary()
        for handler in logging.getLogger().handlers:
            handler.flush()
        records = [json.loads(line) for line in log_file.read_text(encoding="utf-8").splitlines()]
        assert any(r["message"].startswith("Completed command: fan check") for r in records)
        summary = [r for r in records if r["message"] == "Execution summary"]
        assert summary and summary[0]["execution_summary"]["commands_completed"][0]["command"] == "fan check"
        assert all(r["levelname"] for r in records)
