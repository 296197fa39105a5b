"""Divisor Service - Domain Layer

Torus-invariant divisors D = sum b_i D_i: the local data m_sigma, Cartier
and ampleness tests, support polytopes and their faces.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from ..exceptions import DivisorFormatError, InternalInvariantViolation, NotAmpleError
from ..models import DivisorClass, PolytopeFace, SupportPolytope, TorusInvariantDivisor
from ..utils.polytope import satisfies
from ..utils.rational_linalg import kernel_basis, solve
from .coxring_service import CoxRingService
from .fan_service import FanService

logger = logging.getLogger(__name__)


class DivisorService:
    """Domain service for torus-invariant divisors on one fan.

    Args:
        ring: Cox ring of the fan.
        fan_service: Used for cone enumeration.
    """

    def __init__(self, ring: CoxRingService, fan_service: FanService | None = None):
        self.ring = ring
        self.fan = ring.fan
        self.fan_service = fan_service or FanService()

    def divisor(self, b: Sequence[int]) -> TorusInvariantDivisor:
        if len(b) != self.fan.n:
            raise DivisorFormatError(f"divisor needs {self.fan.n} coefficients, got {len(b)}")
        return TorusInvariantDivisor.of(b)

    def m_sigma(self, divisor: TorusInvariantDivisor, cone: Sequence[int]) -> Tuple[Fraction, ...]:
        """Unique m in M_Q with <m, e_i> = -b_i for the rays of a maximal cone."""
        rows = [list(self.fan.rays[i]) for i in cone]
        solution = solve(rows, [-divisor.b[i] for i in cone])
        if solution is None:
            raise InternalInvariantViolation(f"cone {list(cone)} is not full-dimensional")
        return tuple(solution)

    def is_cartier(self, divisor: TorusInvariantDivisor) -> bool:
        return all(
            x.denominator == 1
            for cone in self.fan.max_cones
            for x in self.m_sigma(divisor, cone)
        )

    def is_q_cartier(self, divisor: TorusInvariantDivisor) -> bool:
        """Always true on a simplicial fan; reported as metadata."""
        return True

    def is_ample(self, divisor: TorusInvariantDivisor) -> bool:
        """Strict convexity: <m_sigma, e_j> > -b_j for every maximal cone and every e_j outside it."""
        for cone in self.fan.max_cones:
            m = self.m_sigma(divisor, cone)
            for j in range(self.fan.n):
                if j in cone:
                    continue
                value = sum(x * e for x, e in zip(m, self.fan.rays[j]))
                if not value > -divisor.b[j]:
                    return False
        return True

    def is_ample_class(self, beta: DivisorClass) -> bool:
        return self.is_ample(TorusInvariantDivisor.of(self.ring.representative(beta)))

    def divisor_class(self, divisor: TorusInvariantDivisor) -> DivisorClass:
        return self.ring.class_of(divisor.b)

    def support_polytope(self, divisor: TorusInvariantDivisor) -> SupportPolytope:
        vertices, points = self.ring.divisor_points(divisor.b)
        return SupportPolytope(
            divisor=divisor,
            normals=self.fan.rays,
            vertices=tuple(vertices),
            lattice_points=tuple(points),
        )

    def polytope_faces(self, divisor: TorusInvariantDivisor) -> List[PolytopeFace]:
        """One face per cone tau, from Delta itself (tau = 0) down to the vertices.

        Raises:
            NotAmpleError: If the divisor is not ample.
        """
        if not self.is_ample(divisor):
            raise NotAmpleError(f"divisor {list(divisor.b)} is not ample")
        polytope = self.support_polytope(divisor)
        faces: List[PolytopeFace] = []
        for cone in self.fan_service.all_cones(self.fan):
            faces.append(self._face(polytope, cone))
        logger.debug("Built %d faces for divisor %s", len(faces), list(divisor.b))
        return faces

    def _face(self, polytope: SupportPolytope, cone: Tuple[int, ...]) -> PolytopeFace:
        b = polytope.divisor.b

        def on_face(point: Sequence[Fraction | int]) -> bool:
            return all(
                sum(Fraction(x) * e for x, e in zip(point, self.fan.rays[i])) == -b[i]
                for i in cone
            )

        directions = kernel_basis([list(self.fan.rays[i]) for i in cone], self.fan.dim)
        return PolytopeFace(
            cone=cone,
            dimension=self.fan.dim - len(cone),
            vertices=tuple(v for v in polytope.vertices if on_face(v)),
            lattice_points=tuple(p for p in polytope.lattice_points if on_face(p)),
            direction_space=tuple(tuple(v) for v in directions),
        )

    def face_contains(self, face: PolytopeFace, point: Sequence[Fraction | int], divisor: TorusInvariantDivisor) -> bool:
        """Membership of a point of M_Q in Delta_tau."""
        if not satisfies(point, self.fan.rays, divisor.b):
            return False
        return all(
            sum(Fraction(x) * e for x, e in zip(point, self.fan.rays[i])) == -divisor.b[i]
            for i in face.cone
        )

    def sections_in_irrelevant_ideal(self, beta: DivisorClass) -> bool:
        """Every monomial of S_beta is divisible by z^hat_sigma for some maximal cone."""
        hats = [self.ring.hat_exponent(cone) for cone in self.fan.max_cones]
        return all(
            any(all(x >= h for x, h in zip(a, hat)) for hat in hats)
            for a in self.ring.monomial_basis(beta)
        )
