"""Hodge Service - Domain Layer

Jacobian ideals of a homogeneous polynomial f in the Cox ring and the
dimensions built from them: graded pieces of R(f), R_0(f) and R_1(f),
primitive Hodge numbers of the hypersurface X = V(f), the cohomology of its
complement, Betti numbers of the ambient variety, and the dimensions of Aut
and of the moduli tangent space. Quasi-smoothness and nondegeneracy are
certified with Groebner computations.
"""

from __future__ import annotations

import logging
from contextlib import contextmanager
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from ...ports.driven.progress_report_port import ProgressReportPort
from ..exceptions import (
    NotAmpleError,
    NotNondegenerateError,
    NotQuasiSmoothError,
    PolynomialFormatError,
    TheoremConsistencyError,
)
from ..models import (
    Certificate,
    CertificateEntry,
    DivisorClass,
    Exponent,
    GradedPolynomial,
    HodgeDiamond,
    HodgeReport,
    PolytopeFace,
    TorusInvariantDivisor,
)
from ..utils.rational_linalg import SparseEchelon, SparseRow, sparse_rank
from .coxring_service import CoxRingService
from .divisor_service import DivisorService
from .fan_service import FanService
from .groebner_service import DEFAULT_BUDGET, GroebnerService, MultiPoly

logger = logging.getLogger(__name__)

QUASI_SMOOTH_METHODS = ("chart", "rabinowitsch")


class JacobianVariant(Enum):
    """Which Jacobian-type ideal a graded dimension refers to."""

    J = "J"
    J0 = "J0"
    J1 = "J1"


@dataclass(frozen=True)
class JacobianData:
    """f together with its partials and log-partials.

    Attributes:
        f: Homogeneous polynomial of class beta.
        partials: d f / d z_i, of degree beta - beta_i.
        log_partials: z_i d f / d z_i, of degree beta.
        anticanonical: beta_0 = sum of the ray degrees.
    """

    f: GradedPolynomial
    partials: Tuple[GradedPolynomial, ...]
    log_partials: Tuple[GradedPolynomial, ...]
    anticanonical: DivisorClass


class HodgeService:
    """Domain service for Jacobian rings and Hodge numbers on one fan.

    Args:
        ring: Cox ring of the fan.
        fan_service: Fan combinatorics.
        divisor_service: Ampleness tests and polytope faces.
        budget: Groebner reduction budget per certificate.
        quasi_smooth_method: "chart" or "rabinowitsch".
        unsafe_skip_checks: Skip the ampleness and certificate checks.
        progress: Optional progress reporter for certificate loops.
    """

    def __init__(
        self,
        ring: CoxRingService,
        fan_service: Optional[FanService] = None,
        divisor_service: Optional[DivisorService] = None,
        budget: int = DEFAULT_BUDGET,
        quasi_smooth_method: str = "chart",
        unsafe_skip_checks: bool = False,
        progress: Optional[ProgressReportPort] = None,
    ):
        if quasi_smooth_method not in QUASI_SMOOTH_METHODS:
            raise ValueError(f"unknown quasi-smoothness method {quasi_smooth_method!r}")
        self.ring = ring
        self.fan = ring.fan
        self.fan_service = fan_service or FanService()
        self.divisors = divisor_service or DivisorService(ring, self.fan_service)
        self.budget = budget
        self.quasi_smooth_method = quasi_smooth_method
        self.unsafe_skip_checks = unsafe_skip_checks
        self.progress = progress
        self._quasi_smooth_cache: Dict[Tuple[GradedPolynomial, str], Certificate] = {}
        self._nondegenerate_cache: Dict[Tuple[GradedPolynomial, Tuple[int, ...]], Certificate] = {}

    @property
    def dim(self) -> int:
        return self.fan.dim

    @contextmanager
    def _progress(self, total: int, title: str) -> Iterator[Callable[[int], None]]:
        if self.progress is None:
            yield lambda _: None
            return
        with self.progress.create_progress_bar(total, title) as update:
            yield update

    @contextmanager
    def _spinner(self, title: str) -> Iterator[None]:
        if self.progress is None:
            yield
            return
        with self.progress.create_spinner(title):
            yield

    # ------------------------------------------------------------------
    # Graded dimensions
    # ------------------------------------------------------------------

    def graded_dim_S(self, beta: DivisorClass) -> int:
        return self.ring.graded_dim(beta)

    def jacobian_data(self, f: GradedPolynomial) -> JacobianData:
        n = self.fan.n
        return JacobianData(
            f=f,
            partials=tuple(self.ring.partial_derivative(f, i) for i in range(n)),
            log_partials=tuple(self.ring.log_partial(f, i) for i in range(n)),
            anticanonical=self.ring.anticanonical,
        )

    def _spanning_rows(
        self, generators: Sequence[GradedPolynomial], gamma: DivisorClass
    ) -> Tuple[List[Exponent], List[SparseRow]]:
        """Coordinates of {z^a g : g in generators, deg z^a g = gamma} in the monomial basis of S_gamma."""
        columns = self.ring.monomial_basis(gamma)
        index = {a: k for k, a in enumerate(columns)}
        rows: List[SparseRow] = []
        for g in generators:
            if g.is_zero():
                continue
            for multiplier in self.ring.monomial_basis(gamma - g.degree):
                row: SparseRow = {}
                for a, c in g.items():
                    row[index[tuple(x + y for x, y in zip(a, multiplier))]] = c
                rows.append(row)
        return columns, rows

    def jacobian_graded_dim(
        self, f: GradedPolynomial, gamma: DivisorClass, variant: JacobianVariant | str = JacobianVariant.J
    ) -> int:
        """dim of J(f)_gamma, J_0(f)_gamma or J_1(f)_gamma.

        J_1(f)_gamma = {g in S_gamma : g z_1...z_n in J_0(f)}; its dimension
        is dim W minus the rank of W projected onto monomials not divisible
        by z_1...z_n, where W = J_0(f) in degree gamma + beta_0.
        """
        variant = JacobianVariant(variant)
        data = self.jacobian_data(f)
        if variant is JacobianVariant.J:
            _, rows = self._spanning_rows(data.partials, gamma)
            return sparse_rank(rows)
        if variant is JacobianVariant.J0:
            _, rows = self._spanning_rows(data.log_partials, gamma)
            return sparse_rank(rows)
        columns, rows = self._spanning_rows(data.log_partials, gamma + data.anticanonical)
        whole = sparse_rank(rows)
        outside = {k for k, a in enumerate(columns) if not all(a)}
        projected = sparse_rank({k: c for k, c in row.items() if k in outside} for row in rows)
        return whole - projected

    def dim_R(self, f: GradedPolynomial, gamma: DivisorClass) -> int:
        return self.graded_dim_S(gamma) - self.jacobian_graded_dim(f, gamma, JacobianVariant.J)

    def dim_R0(self, f: GradedPolynomial, gamma: DivisorClass) -> int:
        return self.graded_dim_S(gamma) - self.jacobian_graded_dim(f, gamma, JacobianVariant.J0)

    def dim_R1(self, f: GradedPolynomial, gamma: DivisorClass) -> int:
        return self.graded_dim_S(gamma) - self.jacobian_graded_dim(f, gamma, JacobianVariant.J1)

    def f_in_jacobian_check(self, f: GradedPolynomial) -> bool:
        """f lies in the span of z^a d f / d z_i in degree deg f."""
        columns, rows = self._spanning_rows(self.jacobian_data(f).partials, f.degree)
        echelon = SparseEchelon()
        for row in rows:
            echelon.insert(row)
        index = {a: k for k, a in enumerate(columns)}
        return echelon.contains({index[a]: c for a, c in f.items()})

    def jacobian_colon_defect(self, f: GradedPolynomial, gamma: DivisorClass) -> int:
        """dim J_1(f)_gamma - dim J(f)_gamma."""
        return self.jacobian_graded_dim(f, gamma, JacobianVariant.J1) - self.jacobian_graded_dim(
            f, gamma, JacobianVariant.J
        )

    # ------------------------------------------------------------------
    # Certificates
    # ------------------------------------------------------------------

    def quasi_smooth(self, f: GradedPolynomial, method: Optional[str] = None) -> Certificate:
        """Per-cone check that the partials of f have no common zero off Z.

        The "chart" method sets z_j = 1 for the rays outside each maximal
        cone, which the torus action always allows, and asks whether 1 lies
        in the ideal of the partials. The "rabinowitsch" method tests
        z^hat_sigma against the radical of the partials in n + 1 variables.

        Raises:
            BudgetExceededError: With the offending cone as context.
        """
        method = method or self.quasi_smooth_method
        if method not in QUASI_SMOOTH_METHODS:
            raise ValueError(f"unknown quasi-smoothness method {method!r}")
        key = (f, method)
        if key in self._quasi_smooth_cache:
            return self._quasi_smooth_cache[key]

        partials = [MultiPoly.from_graded(p) for p in self.jacobian_data(f).partials]
        if any(p.nvars != self.fan.n for p in partials):
            raise PolynomialFormatError("polynomial does not live in this Cox ring")
        groebner = GroebnerService(self.budget)
        entries: List[CertificateEntry] = []
        with self._progress(len(self.fan.max_cones), "Quasi-smoothness") as update:
            for cone in self.fan.max_cones:
                groebner.context = f"cone {list(cone)}"
                if method == "chart":
                    outside = [j for j in range(self.fan.n) if j not in cone]
                    passed = groebner.ideal_contains_one([p.substitute_ones(outside) for p in partials])
                else:
                    hat = MultiPoly.monomial(self.ring.hat_exponent(cone))
                    passed = groebner.radical_membership(hat, partials)
                logger.debug("Cone %s: quasi-smooth=%s", list(cone), passed)
                entries.append(CertificateEntry(cone, passed, method))
                update(1)
        certificate = Certificate("quasi_smooth", tuple(entries))
        logger.info(
            "Quasi-smoothness: %d/%d cones passed (%d reduction steps)",
            sum(e.passed for e in entries), len(entries), groebner.steps,
        )
        self._quasi_smooth_cache[key] = certificate
        return certificate

    def face_restriction(
        self, f: GradedPolynomial, face: PolytopeFace, divisor: TorusInvariantDivisor
    ) -> MultiPoly:
        """Laurent restriction of f to a face, shifted into the nonnegative orthant.

        The result lives in d torus variables plus one trailing variable
        reserved for the Rabinowitsch trick.
        """
        d = self.dim
        points = face.lattice_points
        if not points:
            return MultiPoly(d + 1)
        low = [min(p[k] for p in points) for k in range(d)]
        terms: Dict[Tuple[int, ...], Fraction] = {}
        for m in points:
            a = tuple(
                divisor.b[i] + sum(m[k] * self.fan.rays[i][k] for k in range(d))
                for i in range(self.fan.n)
            )
            c = f.terms.get(a)
            if c:
                terms[tuple(m[k] - low[k] for k in range(d)) + (0,)] = c
        return MultiPoly(d + 1, terms)

    def _default_divisor(self, f: GradedPolynomial, divisor: Optional[TorusInvariantDivisor]) -> TorusInvariantDivisor:
        if divisor is None:
            return TorusInvariantDivisor.of(self.ring.representative(f.degree))
        if self.ring.class_of(divisor.b) != f.degree:
            raise PolynomialFormatError(
                f"divisor {list(divisor.b)} has class {self.ring.class_of(divisor.b)}, "
                f"polynomial has degree {f.degree}"
            )
        return divisor

    def nondegenerate(self, f: GradedPolynomial, divisor: Optional[TorusInvariantDivisor] = None) -> Certificate:
        """Per-face Delta-regularity check.

        For every face of the support polytope (including the polytope
        itself), the restriction g and its log-derivatives t_k dg/dt_k must
        have no common zero in the torus.

        Raises:
            NotAmpleError: If the divisor is not ample.
            BudgetExceededError: With the offending face as context.
        """
        divisor = self._default_divisor(f, divisor)
        key = (f, divisor.b)
        if key in self._nondegenerate_cache:
            return self._nondegenerate_cache[key]
        faces = self.divisors.polytope_faces(divisor)
        d = self.dim
        torus_product = MultiPoly(d + 1, {(0,) * (d + 1): 1, (1,) * (d + 1): -1})
        groebner = GroebnerService(self.budget)
        entries: List[CertificateEntry] = []
        with self._progress(len(faces), "Nondegeneracy") as update:
            for face in faces:
                groebner.context = f"face of cone {list(face.cone)}"
                g = self.face_restriction(f, face, divisor)
                if g.is_zero():
                    passed = False
                else:
                    generators = [g] + [
                        MultiPoly(d + 1, {a: c * a[k] for a, c in g.terms.items()}) for k in range(d)
                    ]
                    generators.append(torus_product)
                    passed = groebner.ideal_contains_one(generators)
                logger.debug("Face of cone %s: regular=%s", list(face.cone), passed)
                entries.append(CertificateEntry(face.cone, passed, "delta_regular"))
                update(1)
        certificate = Certificate("nondegenerate", tuple(entries))
        logger.info(
            "Nondegeneracy: %d/%d faces passed (%d reduction steps)",
            sum(e.passed for e in entries), len(entries), groebner.steps,
        )
        self._nondegenerate_cache[key] = certificate
        return certificate

    def _require_quasi_smooth_ample(self, f: GradedPolynomial) -> None:
        if self.unsafe_skip_checks:
            return
        if not self.divisors.is_ample_class(f.degree):
            raise NotAmpleError(f"degree {f.degree} is not an ample class")
        certificate = self.quasi_smooth(f)
        if not certificate.passed:
            cones = [list(e.target) for e in certificate.failures()]
            raise NotQuasiSmoothError(f"f is singular off Z over the cones {cones}")

    def _require_nondegenerate(self, f: GradedPolynomial, divisor: Optional[TorusInvariantDivisor]) -> None:
        if self.unsafe_skip_checks:
            return
        certificate = self.nondegenerate(f, divisor)
        if not certificate.passed:
            cones = [list(e.target) for e in certificate.failures()]
            raise NotNondegenerateError(f"f is not Delta-regular on the faces of cones {cones}")

    # ------------------------------------------------------------------
    # Betti numbers, Hodge numbers, Aut and moduli
    # ------------------------------------------------------------------

    def betti_numbers(self) -> Tuple[int, ...]:
        """b_0, ..., b_{2d} of P from sum over cones of (t^2 - 1)^{d - dim sigma}."""
        d = self.dim
        even = [0] * (d + 1)
        for j in range(d + 1):
            count = len(self.fan_service.cones_of_dimension(self.fan, j))
            power = d - j
            for k in range(power + 1):
                even[k] += count * comb(power, k) * (-1) ** (power - k)
        betti = []
        for k in range(2 * d + 1):
            betti.append(even[k // 2] if k % 2 == 0 else 0)
        return tuple(betti)

    def gr_hodge_complement(self, f: GradedPolynomial, p: int) -> int:
        """dim Gr_F^p H^d(P - X) = dim R(f) in degree (d - p + 1) beta - beta_0."""
        self._require_quasi_smooth_ample(f)
        if p < 0 or p > self.dim:
            return 0
        gamma = (self.dim - p + 1) * f.degree - self.ring.anticanonical
        return self.dim_R(f, gamma)

    def primitive_hodge(self, f: GradedPolynomial, p: int) -> int:
        """dim PH^{p, d-1-p}(X).

        Equal to dim R(f) in degree (d - p) beta - beta_0, except that for
        p = d/2 - 1 the classes coming from H^d(P) are removed, which
        subtracts b_d - b_{d-2}.

        Raises:
            TheoremConsistencyError: If the corrected value is negative.
        """
        self._require_quasi_smooth_ample(f)
        d = self.dim
        if p < 0 or p > d - 1:
            return 0
        gamma = (d - p) * f.degree - self.ring.anticanonical
        value = self.dim_R(f, gamma)
        if d % 2 == 0 and p == d // 2 - 1:
            betti = self.betti_numbers()
            value -= betti[d] - betti[d - 2]
            if value < 0:
                raise TheoremConsistencyError(
                    f"primitive Hodge number for p={p} came out negative ({value})"
                )
        return value

    def primitive_hodge_via_R1(
        self, f: GradedPolynomial, p: int, divisor: Optional[TorusInvariantDivisor] = None
    ) -> int:
        """dim R_1(f) in degree (d - p) beta - beta_0, for nondegenerate f."""
        self._require_nondegenerate(f, divisor)
        if p < 0 or p > self.dim - 1:
            return 0
        gamma = (self.dim - p) * f.degree - self.ring.anticanonical
        return self.dim_R1(f, gamma)

    def affine_hodge_gr(
        self, f: GradedPolynomial, p: int, divisor: Optional[TorusInvariantDivisor] = None
    ) -> int:
        """dim Gr_F^p PH^{d-1}(Y) = dim R_0(f) in degree (d - p) beta, Y = X meet the torus."""
        self._require_nondegenerate(f, divisor)
        if p < 0 or p > self.dim:
            return 0
        return self.dim_R0(f, (self.dim - p) * f.degree)

    def aut_dimension(self) -> int:
        """sum_i (dim S_{beta_i} - 1) + d."""
        return sum(self.graded_dim_S(beta) - 1 for beta in self.ring.ray_degrees) + self.dim

    def tangent_sections_dim(self) -> int:
        """dim H^0(P, T_P), which equals dim Aut(P)."""
        return self.aut_dimension()

    def moduli_tangent_dim(self, f: GradedPolynomial) -> int:
        self._require_quasi_smooth_ample(f)
        return self.dim_R(f, f.degree)

    def global_top_forms_dim(self, beta: DivisorClass) -> int:
        """dim H^0(Omega^d(X)) for X of class beta: A Omega_0 / f with A in S_{beta - beta_0}."""
        return self.graded_dim_S(beta - self.ring.anticanonical)

    def global_dminus1_forms_dim(self, beta: DivisorClass) -> int:
        """sum_i dim S_{beta - beta_0 + beta_i} - (n - d) dim S_{beta - beta_0}."""
        shifted = beta - self.ring.anticanonical
        total = sum(self.graded_dim_S(shifted + beta_i) for beta_i in self.ring.ray_degrees)
        return total - (self.fan.n - self.dim) * self.graded_dim_S(shifted)

    def hodge_diamond(self, f: GradedPolynomial) -> HodgeDiamond:
        """All h^{p,q} of X from the ambient Betti numbers and the primitive part."""
        self._require_quasi_smooth_ample(f)
        top = self.dim - 1
        betti = self.betti_numbers()
        numbers = [[0] * (top + 1) for _ in range(top + 1)]
        for p in range(top + 1):
            if 2 * p < top:
                numbers[p][p] = betti[2 * p]
            elif 2 * p > top:
                numbers[p][p] = betti[2 * (top - p)]
        for p in range(top + 1):
            numbers[p][top - p] += self.primitive_hodge(f, p)
        if top % 2 == 0:
            numbers[top // 2][top // 2] += betti[top]
        return HodgeDiamond(top, tuple(tuple(row) for row in numbers))

    def build_report(
        self, f: GradedPolynomial, divisor: Optional[TorusInvariantDivisor] = None
    ) -> HodgeReport:
        """Full report: flags, certificates and per-p tables.

        Raises:
            NotAmpleError: If the degree is not ample and checks are on.
            NotQuasiSmoothError: If f fails the quasi-smoothness certificate.
        """
        divisor = self._default_divisor(f, divisor)
        d = self.dim
        ample = self.divisors.is_ample(divisor)
        report = HodgeReport(
            dim=d,
            degree=f.degree,
            betti=self.betti_numbers(),
            ample=ample,
            cartier=self.divisors.is_cartier(divisor),
            certified=not self.unsafe_skip_checks,
        )
        nondegenerate = False
        if not self.unsafe_skip_checks:
            if not ample:
                raise NotAmpleError(f"divisor {list(divisor.b)} is not ample")
            qs = self.quasi_smooth(f)
            report.certificates.append(qs)
            report.quasi_smooth = qs.passed
            self._require_quasi_smooth_ample(f)
            nd = self.nondegenerate(f, divisor)
            report.certificates.append(nd)
            nondegenerate = report.nondegenerate = nd.passed

        with self._spinner("Graded dimensions"):
            for p in range(d + 1):
                report.gr_complement[p] = self.gr_hodge_complement(f, p)
            for p in range(d):
                report.primitive[p] = self.primitive_hodge(f, p)
                report.primitive_via_r1[p] = (
                    self.primitive_hodge_via_R1(f, p, divisor)
                    if nondegenerate or self.unsafe_skip_checks
                    else None
                )
                report.affine[p] = (
                    self.affine_hodge_gr(f, p, divisor)
                    if nondegenerate or self.unsafe_skip_checks
                    else None
                )
        report.moduli_tangent_dim = self.moduli_tangent_dim(f)
        report.aut_dimension = self.aut_dimension()
        return report
