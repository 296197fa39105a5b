from __future__ import annotations

import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Tuple

from torica.domain.exceptions import FanFormatError, PolynomialFormatError
from torica.domain.models import Fan, GradedPolynomial
from torica.domain.services.coxring_service import CoxRingService
from torica.ports.driven.model_repository_port import ModelRepositoryPort

logger = logging.getLogger(__name__)


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _read_json(path: Path, error: type) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise error(f"file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise error(f"invalid JSON in {path}: {exc}") from exc
    except OSError as exc:
        raise error(f"cannot read {path}: {exc}") from exc


class JsonModelAdapter(ModelRepositoryPort):
    """Reads fan and polynomial documents.

    Fan document: {"dim": d, "rays": [[int, ...], ...], "max_cones": [[i, ...], ...]}
    with 0-based ray indices. Polynomial document:
    {"degree_divisor": [b_1, ...], "terms": [{"exponents": [...], "coeff": "p/q"}, ...]}.
    """

    def parse_fan(self, document: Any) -> Fan:
        """Shape checks only; the fan axioms are checked by FanService.

        Raises:
            FanFormatError: If a field is missing or has the wrong type.
        """
        if not isinstance(document, dict):
            raise FanFormatError("fan document must be a JSON object")
        missing = [key for key in ("dim", "rays", "max_cones") if key not in document]
        if missing:
            raise FanFormatError(f"fan document lacks {missing}")
        dim, rays, cones = document["dim"], document["rays"], document["max_cones"]
        if not _is_int(dim) or dim < 1:
            raise FanFormatError(f"dim must be a positive integer, got {dim!r}")
        if not isinstance(rays, list) or not all(
            isinstance(ray, list) and all(_is_int(x) for x in ray) for ray in rays
        ):
            raise FanFormatError("rays must be a list of integer lists")
        if not isinstance(cones, list) or not all(
            isinstance(cone, list) and all(_is_int(i) for i in cone) for cone in cones
        ):
            raise FanFormatError("max_cones must be a list of integer lists")
        return Fan.create(dim, rays, cones)

    def load_fan(self, path: Path) -> Fan:
        fan = self.parse_fan(_read_json(path, FanFormatError))
        logger.debug("Loaded fan from %s: d=%d, n=%d", path, fan.dim, fan.n)
        return fan

    def parse_polynomial(
        self, document: Any, ring: CoxRingService
    ) -> Tuple[GradedPolynomial, Tuple[int, ...]]:
        """Build the polynomial in the degree of ``degree_divisor``.

        Raises:
            PolynomialFormatError: On a malformed document, a bad coefficient
                or a term whose degree differs from the divisor class.
        """
        if not isinstance(document, dict) or "degree_divisor" not in document or "terms" not in document:
            raise PolynomialFormatError("polynomial document needs degree_divisor and terms")
        divisor = document["degree_divisor"]
        if not isinstance(divisor, list) or len(divisor) != ring.nvars or not all(_is_int(x) for x in divisor):
            raise PolynomialFormatError(f"degree_divisor must list {ring.nvars} integers")
        terms: Dict[Tuple[int, ...], Fraction] = {}
        if not isinstance(document["terms"], list):
            raise PolynomialFormatError("terms must be a list")
        for term in document["terms"]:
            if not isinstance(term, dict) or "exponents" not in term or "coeff" not in term:
                raise PolynomialFormatError(f"malformed term {term!r}")
            exponents = term["exponents"]
            if not isinstance(exponents, list) or not all(_is_int(x) for x in exponents):
                raise PolynomialFormatError(f"exponents must be integers, got {exponents!r}")
            raw = term["coeff"]
            if not (_is_int(raw) or isinstance(raw, str)):
                raise PolynomialFormatError(f"coefficient {raw!r} must be an integer or a \"p/q\" string")
            try:
                coefficient = Fraction(raw)
            except (ValueError, ZeroDivisionError) as exc:
                raise PolynomialFormatError(f"bad coefficient {raw!r}") from exc
            key = tuple(exponents)
            terms[key] = terms.get(key, Fraction(0)) + coefficient
        degree = ring.class_of(divisor)
        return ring.polynomial(terms, degree), tuple(divisor)

    def load_polynomial(self, path: Path, ring: CoxRingService) -> Tuple[GradedPolynomial, Tuple[int, ...]]:
        f, divisor = self.parse_polynomial(_read_json(path, PolynomialFormatError), ring)
        logger.debug("Loaded polynomial from %s with %d term(s)", path, len(f.terms))
        return f, divisor

