"""Forms Service - Domain Layer

Exterior-form calculus over the Cox ring: the generators Omega_0, Omega_i
and Omega_ij, the exterior derivative, conversion between the dz basis and
S tensor the exterior algebra of M, membership in the module of forms
descending to the toric variety, the global residue map and the
residue-differential identity.

In the M basis, m_k corresponds to the logarithmic form
sum_i <m_k, e_i> dz_i / z_i.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import DivisionByVariableError, NotInImageError, PolynomialFormatError
from ..models import (
    CheckResult,
    Exponent,
    ExteriorForm,
    FormKey,
    GradedPolynomial,
    MForm,
    PolytopeFace,
    TorusInvariantDivisor,
)
from ..utils.rational_linalg import determinant, integer_determinant, inverse, solve_consistent, sparse_rank
from .coxring_service import CoxRingService
from .divisor_service import DivisorService

logger = logging.getLogger(__name__)


class FormsService:
    """Domain service for polynomial differential forms on one fan.

    Args:
        ring: Cox ring of the fan.
        divisor_service: Used by the residue map to locate polytope faces.
    """

    def __init__(self, ring: CoxRingService, divisor_service: Optional[DivisorService] = None):
        self.ring = ring
        self.fan = ring.fan
        self.divisors = divisor_service or DivisorService(ring)
        self._compound: Dict[int, Tuple[List[Tuple[int, ...]], List[Tuple[int, ...]], List[List[int]]]] = {}
        self._faces: Dict[Tuple[int, ...], Dict[Tuple[int, ...], PolytopeFace]] = {}

    @property
    def n(self) -> int:
        return self.fan.n

    @property
    def d(self) -> int:
        return self.fan.dim

    def _det(self, ordered: Sequence[int]) -> int:
        return integer_determinant([list(self.fan.rays[i]) for i in ordered])

    def _hat(self, indices: Sequence[int]) -> Exponent:
        inside = set(indices)
        return tuple(int(j not in inside) for j in range(self.n))

    # ------------------------------------------------------------------
    # Generators
    # ------------------------------------------------------------------

    def function(self, f: GradedPolynomial) -> ExteriorForm:
        return ExteriorForm.function(self.n, f.terms)

    def omega0(self) -> ExteriorForm:
        """sum over d-subsets I of det(e_I) z^hat_I dz_I, of class beta_0."""
        terms: Dict[FormKey, Fraction] = {}
        for subset in combinations(range(self.n), self.d):
            det = self._det(subset)
            if det:
                terms[(self._hat(subset), subset)] = Fraction(det)
        return ExteriorForm(self.n, self.n, self.d, terms)

    def omega_i(self, i: int) -> ExteriorForm:
        """sum over (d-1)-subsets J not containing i of det(e_i, e_J) z^hat_{J+i} dz_J."""
        others = [j for j in range(self.n) if j != i]
        terms: Dict[FormKey, Fraction] = {}
        for subset in combinations(others, self.d - 1):
            det = self._det((i,) + subset)
            if det:
                terms[(self._hat(subset + (i,)), subset)] = Fraction(det)
        return ExteriorForm(self.n, self.n, self.d - 1, terms)

    def opposite_pairs(self) -> List[Tuple[int, int]]:
        """Pairs i < j with e_i = -e_j."""
        rays = self.fan.rays
        return [
            (i, j)
            for i, j in combinations(range(self.n), 2)
            if all(x == -y for x, y in zip(rays[i], rays[j]))
        ]

    def omega_ij(self, i: int, j: int) -> ExteriorForm:
        """Omega_i / z_j for an opposite pair e_i = -e_j, i < j.

        Raises:
            ValueError: If (i, j) is not an opposite pair.
        """
        if (i, j) not in self.opposite_pairs():
            raise ValueError(f"rays {i} and {j} are not an opposite pair with i < j")
        others = [k for k in range(self.n) if k not in (i, j)]
        terms: Dict[FormKey, Fraction] = {}
        for subset in combinations(others, self.d - 1):
            det = self._det((i,) + subset)
            if det:
                terms[(self._hat(subset + (i, j)), subset)] = Fraction(det)
        return ExteriorForm(self.n, self.n, self.d - 1, terms)

    def form_class(self, key: FormKey):
        """Cl-degree of z^a dz_I, with dz_i of degree beta_i."""
        a, indices = key
        degree = self.ring.degree_of(a)
        for i in indices:
            degree = degree + self.ring.ray_degrees[i]
        return degree

    def is_homogeneous(self, form: ExteriorForm) -> bool:
        return len({self.form_class(key) for key in form.terms}) <= 1

    # ------------------------------------------------------------------
    # Calculus
    # ------------------------------------------------------------------

    def exterior_derivative(self, form: ExteriorForm) -> ExteriorForm:
        terms: Dict[FormKey, Fraction] = {}
        for (a, indices), c in form.items():
            for j, power in enumerate(a):
                if not power:
                    continue
                lowered = a[:j] + (power - 1,) + a[j + 1:]
                key = (lowered, (j,) + indices)
                # Unsorted keys are normalized by the constructor.
                terms[key] = terms.get(key, Fraction(0)) + c * power
        return ExteriorForm(self.n, self.n, form.degree + 1, terms)

    def wedge(self, left: ExteriorForm, right: ExteriorForm) -> ExteriorForm:
        return left.wedge(right)

    # ------------------------------------------------------------------
    # dz basis <-> M basis
    # ------------------------------------------------------------------

    def _compound_matrix(self, p: int) -> Tuple[List[Tuple[int, ...]], List[Tuple[int, ...]], List[List[int]]]:
        """p-th compound of alpha: rows indexed by p-subsets of rays, columns by p-subsets of the M basis."""
        cached = self._compound.get(p)
        if cached is None:
            ray_sets = list(combinations(range(self.n), p))
            basis_sets = list(combinations(range(self.d), p))
            matrix = [
                [
                    integer_determinant([[self.fan.rays[i][k] for k in basis] for i in rays])
                    for basis in basis_sets
                ]
                for rays in ray_sets
            ]
            cached = (ray_sets, basis_sets, matrix)
            self._compound[p] = cached
        return cached

    def to_m_form(self, form: ExteriorForm) -> MForm:
        """Rewrite sum c z^a dz_I as sum c z^{a + 1_I} (dz_I / z_I) in the M basis.

        Raises:
            NotInImageError: If some monomial's log-form coefficient vector
                is not in the image of the compound of alpha.
        """
        p = form.degree
        ray_sets, basis_sets, matrix = self._compound_matrix(p)
        row_index = {s: r for r, s in enumerate(ray_sets)}
        grouped: Dict[Exponent, List[Fraction]] = {}
        for (a, indices), c in form.items():
            shifted = tuple(x + int(j in indices) for j, x in enumerate(a))
            vector = grouped.setdefault(shifted, [Fraction(0)] * len(ray_sets))
            vector[row_index[indices]] += c
        terms: Dict[FormKey, Fraction] = {}
        for b, vector in grouped.items():
            solution = solve_consistent(matrix, vector)
            if solution is None:
                raise NotInImageError(f"coefficients of z^{list(b)} are not a wedge of M")
            for basis, value in zip(basis_sets, solution):
                if value:
                    terms[(b, basis)] = value
        return MForm(self.n, self.d, p, terms)

    def from_m_form(self, form: MForm) -> ExteriorForm:
        """Expand m_K into dz_I / z_I and clear the z_I.

        Raises:
            DivisionByVariableError: If a surviving term would need a
                negative exponent.
        """
        p = form.degree
        ray_sets, basis_sets, matrix = self._compound_matrix(p)
        column_index = {s: k for k, s in enumerate(basis_sets)}
        terms: Dict[FormKey, Fraction] = {}
        for (a, basis), c in form.items():
            column = column_index[basis]
            for r, rays in enumerate(ray_sets):
                minor = matrix[r][column]
                if not minor:
                    continue
                key = (tuple(x - int(j in rays) for j, x in enumerate(a)), rays)
                terms[key] = terms.get(key, Fraction(0)) + c * minor
        for (a, rays), c in terms.items():
            if c and min(a, default=0) < 0:
                raise DivisionByVariableError(f"term with dz_{list(rays)} needs z^{list(a)}")
        return ExteriorForm(self.n, self.n, p, terms)

    # ------------------------------------------------------------------
    # Module membership
    # ------------------------------------------------------------------

    def interior(self, form: MForm, i: int) -> MForm:
        """Contraction with the ray e_i."""
        ray = self.fan.rays[i]
        terms: Dict[FormKey, Fraction] = {}
        for (a, basis), c in form.items():
            for r, k in enumerate(basis):
                if ray[k]:
                    key = (a, basis[:r] + basis[r + 1:])
                    terms[key] = terms.get(key, Fraction(0)) + (-1) ** r * c * ray[k]
        return MForm(self.n, self.d, form.degree - 1, terms)

    def module_membership(self, form: MForm, p: Optional[int] = None) -> bool:
        """True iff z_i divides the contraction of the form with e_i, for every i."""
        if p is not None and form.degree != p and not form.is_zero():
            raise ValueError(f"form has degree {form.degree}, expected {p}")
        if form.degree == 0:
            return form.is_zero()
        for i in range(self.n):
            for (a, _), _c in self.interior(form, i).items():
                if a[i] == 0:
                    return False
        return True

    def graded_piece_dim(self, beta, p: int) -> int:
        """Dimension of the degree-beta piece of the module of p-forms, by direct enumeration."""
        monomials = self.ring.monomial_basis(beta)
        subsets = list(combinations(range(self.d), p))
        rows: Dict[Tuple[int, Exponent, Tuple[int, ...]], Dict[int, Fraction]] = {}
        for column, (a, basis) in enumerate((a, basis) for a in monomials for basis in subsets):
            for i in range(self.n):
                if a[i]:
                    continue
                ray = self.fan.rays[i]
                for r, k in enumerate(basis):
                    if ray[k]:
                        row = rows.setdefault((i, a, basis[:r] + basis[r + 1:]), {})
                        row[column] = Fraction((-1) ** r * ray[k])
        dimension = len(monomials) * len(subsets) - sparse_rank(rows.values())
        logger.debug("Module piece in degree %s, p=%d: dim %d", beta, p, dimension)
        return dimension

    def generator_span_dim(self, beta) -> int:
        """dim span{A Omega_i : A in S_{beta - beta_0 + beta_i}}."""
        index: Dict[FormKey, int] = {}
        rows: List[Dict[int, Fraction]] = []
        shift = beta - self.ring.anticanonical
        for i in range(self.n):
            generator = self.to_m_form(self.omega_i(i))
            for multiplier in self.ring.monomial_basis(shift + self.ring.ray_degrees[i]):
                product = generator.times_polynomial({multiplier: Fraction(1)})
                rows.append({index.setdefault(key, len(index)): c for key, c in product.items()})
        return sparse_rank(rows)

    # ------------------------------------------------------------------
    # Residues
    # ------------------------------------------------------------------

    def dual_form(self, cone: Sequence[int]) -> MForm:
        """Constant k-form h_1 ^ ... ^ h_k with <h_r, e_{i_s}> = delta_rs, h_r in the span of the rays."""
        rays = [list(self.fan.rays[i]) for i in cone]
        k = len(rays)
        gram = [[sum(x * y for x, y in zip(u, v)) for v in rays] for u in rays]
        gram_inverse = inverse(gram)
        if gram_inverse is None:
            raise ValueError(f"rays of cone {list(cone)} are dependent")
        dual = [
            [sum(gram_inverse[r][s] * rays[s][c] for s in range(k)) for c in range(self.d)]
            for r in range(k)
        ]
        zero = (0,) * self.n
        terms: Dict[FormKey, Fraction] = {}
        for basis in combinations(range(self.d), k):
            value = determinant([[dual[r][c] for c in basis] for r in range(k)])
            if value:
                terms[(zero, basis)] = value
        return MForm(self.n, self.d, k, terms)

    def evaluate(self, form: MForm, vectors: Sequence[Sequence[int | Fraction]]) -> Fraction:
        """Value of a constant form on vectors of N."""
        if len(vectors) != form.degree:
            raise ValueError(f"a {form.degree}-form takes {form.degree} vectors")
        total = Fraction(0)
        for (a, basis), c in form.items():
            if any(a):
                raise ValueError("only constant forms can be evaluated")
            total += c * determinant([[v[k] for v in vectors] for k in basis])
        return total

    def _face_for(self, divisor: TorusInvariantDivisor, cone: Tuple[int, ...]) -> PolytopeFace:
        faces = self._faces.get(divisor.b)
        if faces is None:
            faces = {face.cone: face for face in self.divisors.polytope_faces(divisor)}
            self._faces[divisor.b] = faces
        if cone not in faces:
            raise ValueError(f"{list(cone)} is not a cone of the fan")
        return faces[cone]

    def residue_map(
        self,
        omega_prime: MForm,
        cone: Sequence[int],
        m: Sequence[int],
        divisor: TorusInvariantDivisor,
    ) -> Fraction:
        """Coefficient of omega_m in the residue of omega_m ^ omega_prime along the orbit of a cone.

        Zero when m lies outside the face Delta_tau; otherwise omega_prime
        evaluated on the rays of the cone.

        Raises:
            NotAmpleError: If the divisor is not ample.
        """
        cone = tuple(sorted(cone))
        if omega_prime.degree != len(cone):
            raise ValueError("omega_prime must have the degree of the cone")
        face = self._face_for(divisor, cone)
        if not self.divisors.face_contains(face, m, divisor):
            return Fraction(0)
        return self.evaluate(omega_prime, [self.fan.rays[i] for i in cone])

    # ------------------------------------------------------------------
    # Identities
    # ------------------------------------------------------------------

    def residue_differential_identity_check(
        self, A: GradedPolynomial, i: int, k: int, f: GradedPolynomial
    ) -> bool:
        """f dA ^ Omega_i + f A dOmega_i - k A df ^ Omega_i == (f dA/dz_i - k A df/dz_i) Omega_0.

        This is d(A Omega_i / f^k) = (f dA/dz_i - k A df/dz_i) Omega_0 / f^(k+1)
        with the denominators cleared.

        Raises:
            PolynomialFormatError: If deg A != k deg f - beta_0 + beta_i.
        """
        expected = k * f.degree - self.ring.anticanonical + self.ring.ray_degrees[i]
        if A.degree != expected:
            raise PolynomialFormatError(f"A has degree {A.degree}, expected {expected}")
        omega_i = self.omega_i(i)
        dA = self.exterior_derivative(self.function(A))
        df = self.exterior_derivative(self.function(f))
        lhs = (
            dA.wedge(omega_i).times_polynomial(f.terms)
            + self.exterior_derivative(omega_i).times_polynomial((A * f).terms)
            - df.wedge(omega_i).times_polynomial(A.terms).scale(k)
        )
        factor = f * self.ring.partial_derivative(A, i) - (A * self.ring.partial_derivative(f, i)).scale(k)
        rhs = self.omega0().times_polynomial(factor.terms)
        return lhs == rhs

    def random_form(self, degree: int, rng: np.random.Generator, size: int = 4, max_power: int = 2) -> ExteriorForm:
        terms: Dict[FormKey, Fraction] = {}
        for _ in range(size):
            a = tuple(int(x) for x in rng.integers(0, max_power + 1, size=self.n))
            indices = tuple(int(x) for x in rng.choice(self.n, size=degree, replace=False))
            terms[(a, indices)] = Fraction(int(rng.integers(-9, 10)))
        return ExteriorForm(self.n, self.n, degree, terms)

    def verify(
        self,
        f: Optional[GradedPolynomial] = None,
        seed: int = 1,
        samples: int = 20,
        expected_dminus1: Optional[int] = None,
    ) -> List[CheckResult]:
        """Run the identity suite for this fan and return one result per check."""
        rng = np.random.default_rng(seed)
        results: List[CheckResult] = []
        omega0 = self.omega0()
        results.append(
            CheckResult(
                "omega0_homogeneous",
                not omega0.is_zero()
                and all(self.form_class(key) == self.ring.anticanonical for key in omega0.terms),
                str(omega0),
            )
        )

        generators = [("omega0", omega0)] + [(f"omega_{i}", self.omega_i(i)) for i in range(self.n)]
        for i, j in self.opposite_pairs():
            omega_ij = self.omega_ij(i, j)
            generators.append((f"omega_{i}_{j}", omega_ij))
            z_j = {tuple(int(x == j) for x in range(self.n)): Fraction(1)}
            z_i = {tuple(int(x == i) for x in range(self.n)): Fraction(1)}
            results.append(
                CheckResult(
                    f"opposite_pair_{i}_{j}",
                    self.omega_i(i) == omega_ij.times_polynomial(z_j)
                    and self.omega_i(j) == -omega_ij.times_polynomial(z_i),
                )
            )
        for name, generator in generators:
            try:
                member = self.module_membership(self.to_m_form(generator))
                detail = ""
            except NotInImageError as exc:
                member, detail = False, str(exc)
            results.append(CheckResult(f"membership_{name}", member, detail))

        nilpotent = all(
            self.exterior_derivative(self.exterior_derivative(self.random_form(p, rng))).is_zero()
            for p in range(0, self.n - 1)
            for _ in range(3)
        )
        results.append(CheckResult("d_squared_zero", nilpotent))

        if f is not None:
            failures = []
            for _ in range(samples):
                i = int(rng.integers(0, self.n))
                k = int(rng.integers(1, 3))
                degree = k * f.degree - self.ring.anticanonical + self.ring.ray_degrees[i]
                if self.ring.graded_dim(degree):
                    A = self.ring.random_polynomial(degree, seed=int(rng.integers(0, 2**31)))
                else:
                    A = GradedPolynomial(degree, {})
                if not self.residue_differential_identity_check(A, i, k, f):
                    failures.append((i, k))
            results.append(
                CheckResult(
                    "residue_differential_identity",
                    not failures,
                    f"{samples} samples" if not failures else f"failed for (i, k) in {failures}",
                )
            )
            if self.divisors.is_ample_class(f.degree):
                brute = self.graded_piece_dim(f.degree, self.d - 1)
                span = self.generator_span_dim(f.degree)
                agree = brute == span and (expected_dminus1 is None or brute == expected_dminus1)
                results.append(
                    CheckResult(
                        "dminus1_forms_dimension",
                        agree,
                        f"enumerated={brute} span={span} formula={expected_dminus1}",
                    )
                )
        logger.info("Forms suite: %d/%d checks passed", sum(r.passed for r in results), len(results))
        return results
