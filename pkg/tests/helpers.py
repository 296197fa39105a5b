"""Polynomial and file helpers shared by the tests."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, Sequence

from torica.domain.models import GradedPolynomial
from torica.domain.services.coxring_service import CoxRingService


def fermat(ring: CoxRingService, power: int, weights: Sequence[int] | None = None) -> GradedPolynomial:
    """sum z_i^(power / w_i)."""
    weights = weights or (1,) * ring.nvars
    terms = {}
    for i, w in enumerate(weights):
        exponent = [0] * ring.nvars
        exponent[i] = power // w
        terms[tuple(exponent)] = 1
    return ring.polynomial(terms)


def write_json(path: Path, document: Dict[str, Any]) -> Path:
    path.write_text(json.dumps(document), encoding="utf-8")
    return path


def sparse_bidegree_curve(ring: CoxRingService, k: int) -> GradedPolynomial:
    """z1^k z3^k + z1^k z4^k + z2^k z3^k + 2 z2^k z4^k on P1 x P1."""
    return ring.polynomial({(k, 0, k, 0): 1, (k, 0, 0, k): 1, (0, k, k, 0): 1, (0, k, 0, k): 2})
