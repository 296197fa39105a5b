"""Fan Service - Domain Layer

Validation of rational simplicial complete fans and the combinatorics of
primitive collections, the exceptional set Z and the Stanley-Reisner ideal.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations, permutations
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import numpy as np

from ..exceptions import (
    BadIntersectionError,
    DegenerateConeError,
    DuplicateRayError,
    InvalidFanStructureError,
    NonPrimitiveRayError,
    NotCompleteError,
    TheoremConsistencyError,
)
from ..models import (
    CoordinateSubspace,
    Exponent,
    Fan,
    FanIssue,
    FanIssueKind,
    FanValidationReport,
    PrimitiveCollection,
    WeightedProjectiveKind,
    WeightedProjectiveVerdict,
)
from ..utils.rational_linalg import determinant, inverse, is_feasible, kernel_basis
from .lattice_service import is_primitive, kernel_basis_rational, smith_normal_form

logger = logging.getLogger(__name__)

Cone = Tuple[int, ...]


def cone_rays(fan: Fan, cone: Sequence[int]) -> List[Tuple[int, ...]]:
    return [fan.rays[i] for i in cone]


def cone_matrix(fan: Fan, cone: Sequence[int]) -> List[List[int]]:
    """d x |cone| matrix whose columns are the rays of ``cone``."""
    return [[fan.rays[i][k] for i in cone] for k in range(fan.dim)]


def cone_determinant(fan: Fan, cone: Sequence[int]) -> Fraction:
    """det(e_I) for an ordered index list of length d."""
    return determinant(cone_matrix(fan, cone))


class FanService:
    """Domain service for fan validation and fan combinatorics.

    Args:
        direction_samples: Random directions used by the covering check.
        seed: Seed for the random directions.
    """

    def __init__(self, direction_samples: int = 100, seed: int = 1):
        self.direction_samples = direction_samples
        self.seed = seed

    # ------------------------------------------------------------------
    # Validation
    # ------------------------------------------------------------------

    def validate_fan(self, fan: Fan) -> FanValidationReport:
        """Check the fan axioms.

        Structure, primitivity, distinctness and simpliciality are checked
        first; when any of them fails the geometric checks are skipped.

        Returns:
            FanValidationReport listing every issue found.
        """
        issues = self._structural_issues(fan)
        if issues:
            return FanValidationReport(tuple(issues))

        for i, ray in enumerate(fan.rays):
            if not is_primitive(ray):
                issues.append(FanIssue(FanIssueKind.NON_PRIMITIVE_RAY, NonPrimitiveRayError(i, ray)))
        seen: Dict[Tuple[int, ...], int] = {}
        for i, ray in enumerate(fan.rays):
            if ray in seen:
                issues.append(FanIssue(FanIssueKind.DUPLICATE_RAY, DuplicateRayError(seen[ray], i)))
            seen.setdefault(ray, i)
        for cone in fan.max_cones:
            if cone_determinant(fan, cone) == 0:
                issues.append(FanIssue(FanIssueKind.DEGENERATE_CONE, DegenerateConeError(cone)))
        if issues:
            return FanValidationReport(tuple(issues))

        for first, second in combinations(fan.max_cones, 2):
            if not self._meet_in_common_face(fan, first, second):
                issues.append(
                    FanIssue(FanIssueKind.BAD_INTERSECTION, BadIntersectionError(first, second))
                )

        walls = self._wall_counts(fan)
        for wall, count in sorted(walls.items()):
            if count != 2:
                issues.append(
                    FanIssue(
                        FanIssueKind.NOT_COMPLETE,
                        NotCompleteError(
                            f"face {list(wall)} lies in {count} maximal cone(s), expected 2",
                            witness=wall,
                        ),
                    )
                )

        if not issues and not self.exact_covering_check(fan):
            issues.append(
                FanIssue(
                    FanIssueKind.NOT_COMPLETE,
                    NotCompleteError("some wall does not separate its two cones"),
                )
            )

        missed = self._uncovered_direction(fan)
        if missed is not None:
            issues.append(
                FanIssue(
                    FanIssueKind.NOT_COMPLETE,
                    NotCompleteError(
                        f"direction {list(missed)} lies in no maximal cone", witness=missed
                    ),
                )
            )

        report = FanValidationReport(
            tuple(issues), walls_checked=len(walls), directions_sampled=self.direction_samples
        )
        logger.debug("Validated fan with %d rays: %d issue(s)", fan.n, len(report.issues))
        return report

    def require_valid(self, fan: Fan) -> None:
        """Raise the first validation error, if any."""
        self.validate_fan(fan).raise_first()

    def _structural_issues(self, fan: Fan) -> List[FanIssue]:
        problems: List[str] = []
        if fan.dim < 1:
            problems.append("dimension must be at least 1")
        for i, ray in enumerate(fan.rays):
            if len(ray) != fan.dim:
                problems.append(f"ray {i} has {len(ray)} coordinates, expected {fan.dim}")
        if not fan.max_cones:
            problems.append("fan has no maximal cones")
        for cone in fan.max_cones:
            if len(cone) != fan.dim or len(set(cone)) != len(cone):
                problems.append(f"cone {list(cone)} must list {fan.dim} distinct rays")
            if any(i < 0 or i >= fan.n for i in cone):
                problems.append(f"cone {list(cone)} refers to a ray out of range")
        if len(set(fan.max_cones)) != len(fan.max_cones):
            problems.append("maximal cones are repeated")
        used = {i for cone in fan.max_cones for i in cone}
        unused = [i for i in range(fan.n) if i not in used]
        if unused:
            problems.append(f"rays {unused} belong to no maximal cone")
        return [
            FanIssue(FanIssueKind.INVALID_STRUCTURE, InvalidFanStructureError(message))
            for message in problems
        ]

    def _meet_in_common_face(self, fan: Fan, first: Cone, second: Cone) -> bool:
        """True when cone(first) ∩ cone(second) = cone(first ∩ second).

        Writes points of cone(second) as C·mu in the basis of ``first`` and
        asks whether some mu >= 0 with C·mu >= 0 uses a ray outside the
        common face.
        """
        basis_inverse = inverse(cone_matrix(fan, first))
        other = cone_matrix(fan, second)
        common = set(first) & set(second)
        d = fan.dim
        change = [
            [sum(basis_inverse[r][k] * other[k][c] for k in range(d)) for c in range(d)]
            for r in range(d)
        ]
        system = []
        for c in range(d):
            unit = [Fraction(0)] * d
            unit[c] = Fraction(1)
            system.append((unit, 0))
        for r in range(d):
            system.append((change[r], 0))
        outside = [Fraction(int(second[c] not in common)) for c in range(d)]
        system.append((outside, 1))
        system.append(([-x for x in outside], -1))
        return not is_feasible(system, d)

    def _wall_counts(self, fan: Fan) -> Dict[Cone, int]:
        counts: Dict[Cone, int] = {}
        for cone in fan.max_cones:
            for wall in combinations(cone, fan.dim - 1):
                counts[wall] = counts.get(wall, 0) + 1
        return counts

    def _uncovered_direction(self, fan: Fan) -> Optional[Tuple[int, ...]]:
        rng = np.random.default_rng(self.seed)
        inverses = [inverse(cone_matrix(fan, cone)) for cone in fan.max_cones]
        for _ in range(self.direction_samples):
            direction = tuple(int(x) for x in rng.integers(-50, 51, size=fan.dim))
            if not any(direction):
                continue
            covered = any(
                all(sum(row[k] * direction[k] for k in range(fan.dim)) >= 0 for row in inv)
                for inv in inverses
            )
            if not covered:
                return direction
        return None

    def exact_covering_check(self, fan: Fan) -> bool:
        """Every wall shared by two maximal cones separates their opposite rays.

        Together with the wall condition and proper intersections this proves
        the cones cover N_R.
        """
        owners: Dict[Cone, List[Cone]] = {}
        for cone in fan.max_cones:
            for wall in combinations(cone, fan.dim - 1):
                owners.setdefault(wall, []).append(cone)
        for wall, cones in owners.items():
            if len(cones) != 2:
                return False
            normal = kernel_basis([list(fan.rays[i]) for i in wall], fan.dim)[0]
            sides = []
            for cone in cones:
                (apex,) = set(cone) - set(wall)
                sides.append(sum(n * x for n, x in zip(normal, fan.rays[apex])))
            if not sides[0] * sides[1] < 0:
                return False
        return True

    # ------------------------------------------------------------------
    # Combinatorics
    # ------------------------------------------------------------------

    def cones_of_dimension(self, fan: Fan, k: int) -> List[Cone]:
        if k < 0 or k > fan.dim:
            raise ValueError(f"cone dimension {k} outside [0, {fan.dim}]")
        return sorted({face for cone in fan.max_cones for face in combinations(cone, k)})

    def all_cones(self, fan: Fan) -> List[Cone]:
        """Every cone of the fan, ordered by dimension."""
        return [c for k in range(fan.dim + 1) for c in self.cones_of_dimension(fan, k)]

    def is_cone(self, fan: Fan, indices: Sequence[int]) -> bool:
        wanted = set(indices)
        return any(wanted <= set(cone) for cone in fan.max_cones)

    def primitive_collections(self, fan: Fan) -> List[PrimitiveCollection]:
        """Minimal non-faces, found breadth-first by size."""
        faces: Set[FrozenSet[int]] = {
            frozenset(face) for cone in fan.max_cones for k in range(fan.dim + 1)
            for face in combinations(cone, k)
        }
        collections: List[PrimitiveCollection] = []
        layer = sorted(tuple(sorted(f)) for f in faces if len(f) == 1)
        for size in range(2, fan.dim + 2):
            next_layer: List[Cone] = []
            for face in layer:
                for j in range(face[-1] + 1, fan.n):
                    candidate = face + (j,)
                    if not all(
                        frozenset(sub) in faces for sub in combinations(candidate, size - 1)
                    ):
                        continue
                    if frozenset(candidate) in faces:
                        next_layer.append(candidate)
                    else:
                        collections.append(PrimitiveCollection(candidate))
            layer = next_layer
        logger.debug("Found %d primitive collection(s)", len(collections))
        return sorted(collections, key=lambda c: (len(c.indices), c.indices))

    def z_sigma_components(self, fan: Fan) -> List[CoordinateSubspace]:
        return [CoordinateSubspace(c.indices) for c in self.primitive_collections(fan)]

    def codim_Z(self, fan: Fan) -> int:
        """Codimension of Z in A^n.

        Raises:
            TheoremConsistencyError: If the value breaks the codimension bound.
        """
        codim = min(len(c.indices) for c in self.primitive_collections(fan))
        if not self.codim_bound_holds(fan, codim):
            raise TheoremConsistencyError(
                f"codim Z = {codim} violates 2 <= codim <= {fan.dim // 2 + 1}"
            )
        return codim

    def codim_bound_holds(self, fan: Fan, codim: int) -> bool:
        if fan.n == fan.dim + 1:
            return codim == fan.n
        return 2 <= codim <= fan.dim // 2 + 1

    def stanley_reisner_generators(self, fan: Fan) -> List[Exponent]:
        """Squarefree exponent vectors, one per primitive collection."""
        return [
            tuple(int(i in c.indices) for i in range(fan.n))
            for c in self.primitive_collections(fan)
        ]

    def weighted_projective_classification(self, fan: Fan) -> WeightedProjectiveVerdict:
        if fan.n != fan.dim + 1:
            return WeightedProjectiveVerdict(WeightedProjectiveKind.NOT_APPLICABLE)
        ray_matrix = fan.ray_matrix()
        (relation,) = kernel_basis_rational(ray_matrix)
        sign = 1 if relation[-1] > 0 else -1
        weights = tuple(int(sign * x) for x in relation)
        invariants = smith_normal_form(ray_matrix).diagonal
        if all(x == 1 for x in invariants):
            return WeightedProjectiveVerdict(WeightedProjectiveKind.IS_WEIGHTED_PROJECTIVE, weights)
        return WeightedProjectiveVerdict(WeightedProjectiveKind.FINITE_COVER_OF_FAN, weights)

    def is_combinatorially_equivalent(self, first: Fan, second: Fan) -> bool:
        """True when a bijection of rays carries maximal cones onto maximal cones."""
        if first.dim != second.dim or first.n != second.n:
            return False
        if len(first.max_cones) != len(second.max_cones):
            return False
        target = set(second.max_cones)

        def degrees(fan: Fan) -> List[int]:
            return [sum(i in c for c in fan.max_cones) for i in range(fan.n)]

        first_degrees, second_degrees = degrees(first), degrees(second)
        if sorted(first_degrees) != sorted(second_degrees):
            return False
        for perm in permutations(range(first.n)):
            if any(first_degrees[i] != second_degrees[perm[i]] for i in range(first.n)):
                continue
            image = {tuple(sorted(perm[i] for i in cone)) for cone in first.max_cones}
            if image == target:
                return True
        return False
