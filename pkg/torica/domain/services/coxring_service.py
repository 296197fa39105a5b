"""Cox Ring Service - Domain Layer

The Cl-graded polynomial ring S = C[z_1, ..., z_n] attached to a fan:
degrees of monomials, monomial bases of graded pieces, derivatives, Euler
relations and generic polynomials.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import (
    EmptyDegreeError,
    InconsistentRelationError,
    InternalInvariantViolation,
    PolynomialFormatError,
)
from ..models import DivisorClass, EulerVector, Exponent, Fan, GradedPolynomial
from ..utils.polytope import is_bounded, lattice_points, polytope_vertices
from .lattice_service import (
    class_of_divisor,
    cokernel_presentation,
    kernel_basis_rational,
    representative_divisor,
)

logger = logging.getLogger(__name__)


def _class_key(beta: DivisorClass) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    return beta.free_part, beta.torsion_part


class CoxRingService:
    """Graded ring S of a fan.

    Graded pieces are cached per class, so one instance should be reused for
    all computations on the same fan.

    Args:
        fan: A valid complete simplicial fan.
    """

    def __init__(self, fan: Fan):
        self.fan = fan
        self.group = cokernel_presentation(fan.alpha_matrix())
        self.ray_degrees: Tuple[DivisorClass, ...] = tuple(
            self.class_of(tuple(int(i == j) for j in range(fan.n))) for i in range(fan.n)
        )
        self.anticanonical: DivisorClass = self.class_of((1,) * fan.n)
        self._basis_cache: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], List[Exponent]] = {}
        if not is_bounded(fan.rays, fan.dim):
            raise InternalInvariantViolation("rays do not span N_R; support polytopes are unbounded")

    @property
    def nvars(self) -> int:
        return self.fan.n

    def class_of(self, b: Sequence[int]) -> DivisorClass:
        return class_of_divisor(b, self.group)

    def degree_of(self, exponent: Sequence[int]) -> DivisorClass:
        """Class of the monomial z^a."""
        return self.class_of(exponent)

    def zero_class(self) -> DivisorClass:
        return self.group.zero()

    def representative(self, beta: DivisorClass) -> Tuple[int, ...]:
        return representative_divisor(beta, self.group)

    def hat_exponent(self, cone: Iterable[int]) -> Exponent:
        """Exponent of z^hat_sigma = product of z_i over rays not in the cone."""
        inside = set(cone)
        return tuple(int(i not in inside) for i in range(self.fan.n))

    # ------------------------------------------------------------------
    # Graded pieces
    # ------------------------------------------------------------------

    def divisor_points(self, b: Sequence[int]) -> Tuple[List[Tuple[Fraction, ...]], List[Tuple[int, ...]]]:
        """Vertices and lattice points of {m : <m, e_i> >= -b_i}."""
        vertices = polytope_vertices(self.fan.rays, b, self.fan.dim)
        return vertices, lattice_points(self.fan.rays, b, vertices, self.fan.dim)

    def monomials_from_points(self, b: Sequence[int], points: Iterable[Sequence[int]]) -> List[Exponent]:
        return sorted(
            tuple(b[i] + sum(m[k] * self.fan.rays[i][k] for k in range(self.fan.dim)) for i in range(self.fan.n))
            for m in points
        )

    def monomial_basis(self, beta: DivisorClass) -> List[Exponent]:
        """All exponents a >= 0 with class(a) = beta, sorted.

        Computed through the lattice points of the support polytope of the
        canonical representative of beta.
        """
        key = _class_key(beta)
        cached = self._basis_cache.get(key)
        if cached is None:
            b = self.representative(beta)
            _, points = self.divisor_points(b)
            cached = self.monomials_from_points(b, points)
            self._basis_cache[key] = cached
            logger.debug("dim S_%s = %d", beta, len(cached))
        return list(cached)

    def graded_dim(self, beta: DivisorClass) -> int:
        return len(self.monomial_basis(beta))

    # ------------------------------------------------------------------
    # Polynomials
    # ------------------------------------------------------------------

    def polynomial(self, terms: Mapping[Sequence[int], Fraction | int], degree: Optional[DivisorClass] = None) -> GradedPolynomial:
        """Build a homogeneous polynomial, checking every term's class.

        Raises:
            PolynomialFormatError: On wrong exponent length, negative
                exponents or mixed degrees.
        """
        cleaned: Dict[Exponent, Fraction] = {}
        for exponent, coefficient in terms.items():
            a = tuple(int(x) for x in exponent)
            if len(a) != self.nvars or any(x < 0 for x in a):
                raise PolynomialFormatError(f"invalid exponent vector {list(a)}")
            value = Fraction(coefficient)
            if value:
                cleaned[a] = cleaned.get(a, Fraction(0)) + value
        if degree is None:
            if not cleaned:
                raise PolynomialFormatError("the degree of the zero polynomial must be given")
            degree = self.degree_of(next(iter(cleaned)))
        for a in cleaned:
            if self.degree_of(a) != degree:
                raise PolynomialFormatError(
                    f"monomial {list(a)} has degree {self.degree_of(a)}, expected {degree}"
                )
        return GradedPolynomial(degree, cleaned)

    def monomial(self, exponent: Sequence[int], coefficient: Fraction | int = 1) -> GradedPolynomial:
        return self.polynomial({tuple(exponent): coefficient})

    def partial_derivative(self, f: GradedPolynomial, i: int) -> GradedPolynomial:
        """d f / d z_i, of degree deg f - beta_i."""
        terms: Dict[Exponent, Fraction] = {}
        for a, c in f.items():
            if a[i]:
                lowered = a[:i] + (a[i] - 1,) + a[i + 1:]
                terms[lowered] = c * a[i]
        return GradedPolynomial(f.degree - self.ray_degrees[i], terms)

    def log_partial(self, f: GradedPolynomial, i: int) -> GradedPolynomial:
        """z_i d f / d z_i, of degree deg f."""
        return GradedPolynomial(f.degree, {a: c * a[i] for a, c in f.items() if a[i]})

    def multiply(self, f: GradedPolynomial, g: GradedPolynomial) -> GradedPolynomial:
        return f * g

    # ------------------------------------------------------------------
    # Euler relations
    # ------------------------------------------------------------------

    def euler_relations_basis(self) -> List[EulerVector]:
        """Basis of {phi : sum phi_i e_i = 0}, of dimension n - d."""
        return [EulerVector(v) for v in kernel_basis_rational(self.fan.ray_matrix())]

    def euler_derivative(self, phi: EulerVector, f: GradedPolynomial) -> GradedPolynomial:
        """sum_i phi_i z_i d f / d z_i."""
        return GradedPolynomial(
            f.degree, {a: c * sum(p * x for p, x in zip(phi.phi, a)) for a, c in f.items()}
        )

    def euler_constant(self, phi: EulerVector, beta: DivisorClass, f: Optional[GradedPolynomial] = None) -> Fraction:
        """The constant phi(beta) = sum phi_i a_i, equal for all monomials of degree beta.

        Raises:
            EmptyDegreeError: If S_beta = 0.
            InconsistentRelationError: If monomials of degree beta disagree,
                or the Euler identity fails for ``f``.
        """
        basis = self.monomial_basis(beta)
        if not basis:
            raise EmptyDegreeError(f"S_{beta} = 0")
        values = {sum(p * x for p, x in zip(phi.phi, a)) for a in basis}
        if len(values) != 1:
            raise InconsistentRelationError(
                f"relation {[str(p) for p in phi.phi]} takes {len(values)} values in degree {beta}"
            )
        (value,) = values
        if f is not None and self.euler_derivative(phi, f) != f.scale(value):
            raise InconsistentRelationError("Euler identity fails for the supplied polynomial")
        return Fraction(value)

    # ------------------------------------------------------------------
    # Generic sections
    # ------------------------------------------------------------------

    def random_polynomial(self, beta: DivisorClass, seed: int = 1) -> GradedPolynomial:
        """Polynomial with nonzero coefficients in [-9, 9] on every monomial of degree beta.

        Raises:
            EmptyDegreeError: If S_beta = 0.
        """
        basis = self.monomial_basis(beta)
        if not basis:
            raise EmptyDegreeError(f"S_{beta} = 0; no polynomial of this degree")
        rng = np.random.default_rng(seed)
        magnitudes = rng.integers(1, 10, size=len(basis))
        signs = rng.choice([-1, 1], size=len(basis))
        return GradedPolynomial(
            beta, {a: Fraction(int(s) * int(m)) for a, s, m in zip(basis, signs, magnitudes)}
        )
