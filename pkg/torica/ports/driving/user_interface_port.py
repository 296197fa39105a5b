from __future__ import annotations

from typing import Protocol


class UserInterfacePort(Protocol):
    """Driving port for presenting results on the command line.

    Implementations write reports and diagnostics without encoding any
    mathematics.
    """

    def output(self, text: str) -> None:
        ...

    def info(self, message: str) -> None:
        ...

    def error(self, message: str) -> None:
        ...
