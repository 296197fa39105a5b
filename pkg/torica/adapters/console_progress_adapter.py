from __future__ import annotations

import sys
from contextlib import contextmanager
from typing import Callable, Iterator, TextIO

from torica.ports.driven.progress_report_port import ProgressReportPort

try:
    from alive_progress import alive_bar
except ImportError:
    alive_bar = None


class ConsoleProgressAdapter(ProgressReportPort):
    """Progress bars on stderr via alive-progress.

    Reports go to stdout, so bars are drawn on stderr and only when it is a
    terminal. Without alive-progress, or off a terminal, the bar is a no-op.
    """

    def __init__(self, stream: TextIO | None = None, enabled: bool | None = None):
        self.stream = stream or sys.stderr
        self.enabled = self.stream.isatty() if enabled is None else enabled

    @contextmanager
    def create_progress_bar(self, total: int, title: str) -> Iterator[Callable[[int], None]]:
        if alive_bar is None or not self.enabled:

            def noop_update(delta: int = 1) -> None:
                pass

            yield noop_update
            return

        with alive_bar(total, title=title, file=self.stream) as bar:

            def update(delta: int = 1) -> None:
                for _ in range(delta):
                    bar()

            yield update

    @contextmanager
    def create_spinner(self, title: str) -> Iterator[None]:
        if alive_bar is None or not self.enabled:
            yield
            return
        with alive_bar(None, title=title, file=self.stream, monitor=False, stats=False):
            yield
