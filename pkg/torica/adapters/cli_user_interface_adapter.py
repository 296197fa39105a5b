from __future__ import annotations

import sys
from typing import TextIO

from torica.application.ui_components import Colors, colorize
from torica.ports.driving.user_interface_port import UserInterfacePort


class CLIUserInterfaceAdapter(UserInterfacePort):
    """Reports on stdout, diagnostics on stderr."""

    def __init__(self, stdout: TextIO | None = None, stderr: TextIO | None = None):
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr

    def output(self, text: str) -> None:
        self.stdout.write(text if text.endswith("\n") else text + "\n")

    def info(self, message: str) -> None:
        print(message, file=self.stderr)

    def error(self, message: str) -> None:
        print(colorize(f"error: {message}", Colors.RED), file=self.stderr)
