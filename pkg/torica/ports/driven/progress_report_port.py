from __future__ import annotations

from typing import Callable, ContextManager, Protocol


class ProgressReportPort(Protocol):
    """Driven port for reporting progress of certificate computations.

    Certificates run one Groebner computation per cone or per face; this port
    lets them advance a bar without knowing how it is drawn.
    """

    def create_progress_bar(
        self,
        total: int,
        title: str,
    ) -> ContextManager[Callable[[int], None]]:
        """Create a progress bar context manager.

        Args:
            total: Number of cones or faces to check
            title: Title shown next to the bar

        Returns:
            Context manager yielding an update function that takes an
            integer increment.

        Example:
            with progress.create_progress_bar(len(cones), "Quasi-smoothness") as update:
                for cone in cones:
                    check(cone)
                    update(1)
        """
        ...

    def create_spinner(self, title: str) -> ContextManager[None]:
        """Indeterminate spinner for computations of unknown length."""
        ...
