from __future__ import annotations

from pathlib import Path
from typing import Protocol, Tuple

from torica.domain.models import Fan, GradedPolynomial
from torica.domain.services.coxring_service import CoxRingService


class ModelRepositoryPort(Protocol):
    """Driven port for reading fans and polynomials."""

    def load_fan(self, path: Path) -> Fan:
        """Parse a fan document.

        Raises:
            FanFormatError: If the document does not follow the fan format.
        """
        ...

    def load_polynomial(self, path: Path, ring: CoxRingService) -> Tuple[GradedPolynomial, Tuple[int, ...]]:
        """Parse a polynomial document against a Cox ring.

        Returns:
            The polynomial and the degree divisor given in the document.

        Raises:
            PolynomialFormatError: If the document is malformed or mixes degrees.
        """
        ...
