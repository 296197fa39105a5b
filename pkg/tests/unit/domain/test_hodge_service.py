"""Unit tests for Jacobian rings, certificates and Hodge numbers."""

from typing import List, Tuple

import numpy as np
import pytest

from tests.helpers import fermat, sparse_bidegree_curve
from torica.domain.exceptions import (
    BudgetExceededError,
    NotAmpleError,
    NotNondegenerateError,
    NotQuasiSmoothError,
    PolynomialFormatError,
)
from torica.domain.models import Fan, GradedPolynomial, TorusInvariantDivisor
from torica.domain.services import hodge_service
from torica.domain.services.coxring_service import CoxRingService
from torica.domain.services.fan_builders import (
    blown_up_plane,
    product_of_fans,
    projective_space,
    weighted_projective,
)
from torica.domain.services.groebner_service import GroebnerService
from torica.domain.services.hodge_service import HodgeService, JacobianVariant


class TestBettiNumbers:
    @pytest.mark.parametrize(
        "fan,expected",
        [
            (projective_space(1), (1, 0, 1)),
            (projective_space(2), (1, 0, 1, 0, 1)),
            (projective_space(3), (1, 0, 1, 0, 1, 0, 1)),
            (product_of_fans(projective_space(1), projective_space(1)), (1, 0, 2, 0, 1)),
            (weighted_projective((1, 1, 2)), (1, 0, 1, 0, 1)),
            (blown_up_plane(), (1, 0, 2, 0, 1)),
        ],
    )
    def test_betti_numbers(self, fan: Fan, expected):
        assert HodgeService(CoxRingService(fan)).betti_numbers() == expected

    def test_even_betti_numbers_count_max_cones(self):
        fan = product_of_fans(projective_space(2), projective_space(1))
        betti = HodgeService(CoxRingService(fan)).betti_numbers()
        assert betti[0] == betti[-1] == 1
        assert sum(betti) == len(fan.max_cones)


class TestJacobianRing:
    def test_fermat_cubic_jacobian(self, p2_ring: CoxRingService, p2_hodge: HodgeService):
        f = fermat(p2_ring, 3)
        assert p2_hodge.jacobian_graded_dim(f, f.degree) == 9
        assert p2_hodge.jacobian_graded_dim(f, f.degree, "J0") == 3
        assert p2_hodge.jacobian_graded_dim(f, f.degree, JacobianVariant.J1) == 9
        assert p2_hodge.dim_R(f, f.degree) == 1

    def test_fermat_cubic_graded_pieces(self, p2_ring: CoxRingService, p2_hodge: HodgeService):
        f = fermat(p2_ring, 3)
        dims = [p2_hodge.dim_R(f, p2_ring.class_of((k, 0, 0))) for k in range(5)]
        assert dims == [1, 3, 3, 1, 0]

    def test_colon_defect_vanishes_on_projective_space(self, p2_ring: CoxRingService, p2_hodge: HodgeService):
        f = fermat(p2_ring, 3)
        for k in range(7):
            assert p2_hodge.jacobian_colon_defect(f, p2_ring.class_of((k, 0, 0))) == 0

    def test_colon_defect_on_product_of_lines(self, p1xp1_ring: CoxRingService, p1xp1_hodge: HodgeService):
        f = sparse_bidegree_curve(p1xp1_ring, 3)
        assert p1xp1_hodge.jacobian_colon_defect(f, p1xp1_ring.class_of((4, 0, 4, 0))) == 1

    def test_f_in_jacobian(self, p112_ring: CoxRingService):
        assert HodgeService(p112_ring).f_in_jacobian_check(fermat(p112_ring, 4, (1, 1, 2)))

    def test_f_in_jacobian_on_random_bidegrees(self, p1xp1_ring: CoxRingService, p1xp1_hodge: HodgeService):
        rng = np.random.default_rng(21)
        for seed in range(50):
            a, b = (int(x) for x in rng.integers(0, 4, size=2))
            beta = p1xp1_ring.class_of((a or 1, 0, b, 0))
            assert p1xp1_hodge.f_in_jacobian_check(p1xp1_ring.random_polynomial(beta, seed=seed)), seed

    def test_f_in_jacobian_on_random_plane_curves(self, p2_ring: CoxRingService, p2_hodge: HodgeService):
        for seed in range(20):
            beta = p2_ring.class_of((1 + seed % 5, 0, 0))
            assert p2_hodge.f_in_jacobian_check(p2_ring.random_polynomial(beta, seed=seed)), seed

    def test_f_in_jacobian_on_random_weighted_quartics(self, p112_ring: CoxRingService):
        hodge = HodgeService(p112_ring)
        beta = p112_ring.class_of((4, 0, 0))
        for seed in range(30):
            assert hodge.f_in_jacobian_check(p112_ring.random_polynomial(beta, seed=seed)), seed


class TestCertificates:
    @pytest.mark.parametrize("method", ["chart", "rabinowitsch"])
    def test_fermat_cubic_is_quasi_smooth(self, p2_ring: CoxRingService, p2_hodge: HodgeService, method: str):
        certificate = p2_hodge.quasi_smooth(fermat(p2_ring, 3), method)
        assert certificate.passed
        assert [e.target for e in certificate.entries] == [(0, 1), (0, 2), (1, 2)]
        assert all(e.method == method for e in certificate.entries)

    @pytest.mark.parametrize("method", ["chart", "rabinowitsch"])
    def test_singular_control_is_rejected(self, p2_ring: CoxRingService, p2_hodge: HodgeService, method: str):
        f = p2_ring.polynomial({(3, 0, 0): 1, (0, 3, 0): 1})
        certificate = p2_hodge.quasi_smooth(f, method)
        assert not certificate.passed
        assert [e.target for e in certificate.failures()] == [(0, 1)]

    def test_unknown_method(self, p2_ring: CoxRingService, p2_hodge: HodgeService):
        with pytest.raises(ValueError):
            p2_hodge.quasi_smooth(fermat(p2_ring, 3), "lucky")

    def test_fermat_cubic_is_nondegenerate(self, p2_ring: CoxRingService, p2_hodge: HodgeService):
        certificate = p2_hodge.nondegenerate(fermat(p2_ring, 3))
        assert certificate.passed
        assert len(certificate.entries) == 7
        assert certificate.to_dict()["kind"] == "nondegenerate"

    def test_missing_vertex_monomial_is_degenerate(self, p1xp1_ring: CoxRingService, p1xp1_hodge: HodgeService):
        f = p1xp1_ring.polynomial({(2, 0, 2, 0): 1, (0, 2, 0, 2): 1})
        certificate = p1xp1_hodge.nondegenerate(f)
        assert not certificate.passed
        assert (0, 3) in [e.target for e in certificate.failures()]
        with pytest.raises(NotNondegenerateError):
            p1xp1_hodge.primitive_hodge_via_R1(f, 0)

    def test_nondegenerate_needs_ample_divisor(self, p2_ring: CoxRingService, p2_hodge: HodgeService):
        f = p2_ring.polynomial({(0, 0, 0): 1})
        with pytest.raises(NotAmpleError):
            p2_hodge.nondegenerate(f)

    def test_divisor_must_match_degree(self, p2_ring: CoxRingService, p2_hodge: HodgeService):
        with pytest.raises(PolynomialFormatError):
            p2_hodge.nondegenerate(fermat(p2_ring, 3), TorusInvariantDivisor.of((2, 0, 0)))

    def test_budget_exhaustion_names_the_cone(self, p2_ring: CoxRingService):
        hodge = HodgeService(p2_ring, budget=1)
        f = p2_ring.random_polynomial(p2_ring.class_of((4, 0, 0)), seed=1)
        with pytest.raises(BudgetExceededError, match="cone"):
            hodge.quasi_smooth(f)

    def test_each_certificate_gets_its_own_budget(self, p2_ring: CoxRingService, monkeypatch):
        created: List[GroebnerService] = []

        class RecordingGroebner(GroebnerService):
            def __init__(self, budget: int):
                super().__init__(budget)
                created.append(self)

        monkeypatch.setattr(hodge_service, "GroebnerService", RecordingGroebner)
        hodge = HodgeService(p2_ring, budget=10_000)
        f = fermat(p2_ring, 3)
        assert hodge.quasi_smooth(f).passed
        assert hodge.nondegenerate(f).passed
        assert len(created) == 2
        assert all(g.budget == 10_000 and g.steps <= 10_000 for g in created)

    def test_certificates_are_cached(self, p2_ring: CoxRingService, p2_hodge: HodgeService):
        f = fermat(p2_ring, 3)
        assert p2_hodge.quasi_smooth(f) is p2_hodge.quasi_smooth(f)


class TestHodgeNumbers:
    def test_cubic_curve(self, p2_ring: CoxRingService, p2_hodge: HodgeService):
        f = fermat(p2_ring, 3)
        assert p2_hodge.primitive_hodge(f, 1) == 1
        assert p2_hodge.primitive_hodge(f, 0) == 1
        assert [p2_hodge.gr_hodge_complement(f, p) for p in range(3)] == [0, 1, 1]
        assert [p2_hodge.primitive_hodge_via_R1(f, p) for p in range(2)] == [1, 1]
        assert [p2_hodge.affine_hodge_gr(f, p) for p in range(2)] == [1, 7]
        assert p2_hodge.moduli_tangent_dim(f) == 1

    def test_out_of_range_p(self, p2_ring: CoxRingService, p2_hodge: HodgeService):
        f = fermat(p2_ring, 3)
        assert p2_hodge.primitive_hodge(f, 2) == 0
        assert p2_hodge.primitive_hodge(f, -1) == 0
        assert p2_hodge.gr_hodge_complement(f, 3) == 0

    def test_plane_quartic_genus(self, p2_ring: CoxRingService, p2_hodge: HodgeService):
        f = fermat(p2_ring, 4)
        assert [p2_hodge.primitive_hodge(f, p) for p in range(2)] == [3, 3]

    def test_k3_surface(self, p3: Fan):
        ring = CoxRingService(p3)
        hodge = HodgeService(ring)
        f = fermat(ring, 4)
        assert hodge.primitive_hodge(f, 0) == 1
        assert hodge.primitive_hodge(f, 1) == 19
        assert hodge.primitive_hodge(f, 2) == 1
        diamond = hodge.hodge_diamond(f)
        assert diamond.numbers[1] == (0, 20, 0)
        assert diamond.euler_characteristic == 24

    def test_bidegree_three_curve(self, p1xp1_ring: CoxRingService, p1xp1_hodge: HodgeService):
        f = sparse_bidegree_curve(p1xp1_ring, 3)
        assert p1xp1_hodge.nondegenerate(f).passed
        assert p1xp1_hodge.primitive_hodge(f, 1) == 4
        assert p1xp1_hodge.primitive_hodge(f, 0) == 4
        assert p1xp1_hodge.primitive_hodge_via_R1(f, 0) == 4
        assert p1xp1_hodge.hodge_diamond(f).euler_characteristic == -6

    def test_generic_bidegree_three_curve(self, p1xp1_ring: CoxRingService, p1xp1_hodge: HodgeService):
        f = p1xp1_ring.random_polynomial(p1xp1_ring.class_of((3, 0, 3, 0)), seed=1)
        assert len(f.terms) == 16
        assert p1xp1_hodge.nondegenerate(f).passed
        assert p1xp1_hodge.primitive_hodge(f, 1) == 4
        assert p1xp1_hodge.primitive_hodge(f, 0) == 4
        assert p1xp1_hodge.primitive_hodge_via_R1(f, 0) == 4

    def test_weighted_quartic(self, p112_ring: CoxRingService):
        hodge = HodgeService(p112_ring)
        f = fermat(p112_ring, 4, (1, 1, 2))
        assert hodge.primitive_hodge(f, 1) == 1
        assert hodge.primitive_hodge(f, 0) == 1

    def test_cubic_diamond(self, p2_ring: CoxRingService, p2_hodge: HodgeService):
        diamond = p2_hodge.hodge_diamond(fermat(p2_ring, 3))
        assert diamond.numbers == ((1, 1), (1, 1))
        assert diamond.euler_characteristic == 0
        assert diamond.betti(1) == 2

    def test_singular_polynomial_is_refused(self, p2_ring: CoxRingService, p2_hodge: HodgeService):
        f = p2_ring.polynomial({(3, 0, 0): 1, (0, 3, 0): 1})
        with pytest.raises(NotQuasiSmoothError):
            p2_hodge.primitive_hodge(f, 0)

    def test_unsafe_mode_skips_certificates(self, p2_ring: CoxRingService):
        hodge = HodgeService(p2_ring, unsafe_skip_checks=True)
        f = p2_ring.polynomial({(3, 0, 0): 1, (0, 3, 0): 1})
        assert hodge.primitive_hodge(f, 1) >= 0

    def test_non_ample_degree_is_refused(self, p2_ring: CoxRingService, p2_hodge: HodgeService):
        with pytest.raises(NotAmpleError):
            p2_hodge.gr_hodge_complement(p2_ring.polynomial({(0, 0, 0): 1}), 0)

    def test_build_report(self, p2_ring: CoxRingService, p2_hodge: HodgeService):
        report = p2_hodge.build_report(fermat(p2_ring, 3)).to_dict()
        assert report["primitive"] == {"0": 1, "1": 1}
        assert report["primitive_via_r1"] == {"0": 1, "1": 1}
        assert report["gr_complement"] == {"0": 0, "1": 1, "2": 1}
        assert report["betti"] == [1, 0, 1, 0, 1]
        assert report["moduli_tangent_dim"] == 1
        assert report["aut_dimension"] == 8
        assert report["flags"] == {
            "quasi_smooth": True,
            "nondegenerate": True,
            "ample": True,
            "cartier": True,
            "certified": True,
        }
        assert [c["kind"] for c in report["certificates"]] == ["quasi_smooth", "nondegenerate"]


class TestAutAndForms:
    @pytest.mark.parametrize(
        "fan,expected",
        [
            (projective_space(2), 8),
            (product_of_fans(projective_space(1), projective_space(1)), 6),
            (weighted_projective((1, 1, 2)), 7),
            (projective_space(4), 24),
        ],
    )
    def test_aut_dimension(self, fan: Fan, expected: int):
        hodge = HodgeService(CoxRingService(fan))
        assert hodge.aut_dimension() == expected
        assert hodge.tangent_sections_dim() == expected

    def test_global_forms(self, p2_ring: CoxRingService, p2_hodge: HodgeService):
        assert p2_hodge.global_top_forms_dim(p2_ring.class_of((3, 0, 0))) == 1
        assert p2_hodge.global_top_forms_dim(p2_ring.class_of((2, 0, 0))) == 0
        assert p2_hodge.global_dminus1_forms_dim(p2_ring.class_of((3, 0, 0))) == 8
        assert p2_hodge.global_dminus1_forms_dim(p2_ring.class_of((2, 0, 0))) == 3


def consistency_corpus() -> List[Tuple[str, CoxRingService, GradedPolynomial]]:
    p2 = CoxRingService(projective_space(2))
    p3 = CoxRingService(projective_space(3))
    p1xp1 = CoxRingService(product_of_fans(projective_space(1), projective_space(1)))
    p112 = CoxRingService(weighted_projective((1, 1, 2)))
    return [
        ("plane cubic", p2, fermat(p2, 3)),
        ("plane quartic", p2, fermat(p2, 4)),
        ("plane quintic", p2, fermat(p2, 5)),
        ("bidegree (2,2)", p1xp1, sparse_bidegree_curve(p1xp1, 2)),
        ("bidegree (3,3)", p1xp1, sparse_bidegree_curve(p1xp1, 3)),
        ("weighted quartic", p112, fermat(p112, 4, (1, 1, 2))),
        ("weighted sextic", p112, fermat(p112, 6, (1, 1, 2))),
        ("cubic surface", p3, fermat(p3, 3)),
        ("quartic surface", p3, fermat(p3, 4)),
    ]


def certificate_corpus() -> List[Tuple[str, CoxRingService, GradedPolynomial]]:
    p2 = CoxRingService(projective_space(2))
    p1xp1 = CoxRingService(product_of_fans(projective_space(1), projective_space(1)))
    p112 = CoxRingService(weighted_projective((1, 1, 2)))
    return consistency_corpus() + [
        ("generic cubic", p2, p2.random_polynomial(p2.class_of((3, 0, 0)), seed=4)),
        ("generic bidegree (3,3)", p1xp1, p1xp1.random_polynomial(p1xp1.class_of((3, 0, 3, 0)), seed=1)),
        ("generic weighted quartic", p112, p112.random_polynomial(p112.class_of((4, 0, 0)), seed=2)),
        ("cusp", p2, p2.polynomial({(0, 2, 1): 1, (3, 0, 0): -1})),
    ]


class TestCrossConsistency:
    @pytest.mark.parametrize("name,ring,f", consistency_corpus(), ids=[c[0] for c in consistency_corpus()])
    def test_r_and_r1_agree(self, name: str, ring: CoxRingService, f: GradedPolynomial):
        hodge = HodgeService(ring)
        assert hodge.nondegenerate(f).passed, name
        d = ring.fan.dim
        betti = hodge.betti_numbers()
        for p in range(d):
            gamma = (d - p) * f.degree - ring.anticanonical
            defect = hodge.dim_R(f, gamma) - hodge.dim_R1(f, gamma)
            if d % 2 == 0 and p == d // 2 - 1:
                assert defect == betti[d] - betti[d - 2], (name, p)
            else:
                assert defect == 0, (name, p)

    @pytest.mark.parametrize("name,ring,f", certificate_corpus(), ids=[c[0] for c in certificate_corpus()])
    def test_nondegenerate_implies_quasi_smooth(self, name: str, ring: CoxRingService, f: GradedPolynomial):
        hodge = HodgeService(ring)
        nondegenerate = hodge.nondegenerate(f).passed
        assert hodge.quasi_smooth(f).passed or not nondegenerate, name

    @pytest.mark.parametrize("name,ring,f", consistency_corpus(), ids=[c[0] for c in consistency_corpus()])
    def test_weight_bound(self, name: str, ring: CoxRingService, f: GradedPolynomial):
        hodge = HodgeService(ring)
        d = ring.fan.dim
        for p in range(d):
            assert hodge.dim_R1(f, (d - p) * f.degree - ring.anticanonical) <= hodge.dim_R0(
                f, (d - p) * f.degree
            ), (name, p)


@pytest.mark.slow
class TestQuinticThreefold:
    @pytest.fixture
    def quintic(self, p4: Fan):
        ring = CoxRingService(p4)
        return HodgeService(ring), fermat(ring, 5)

    def test_primitive_hodge_numbers(self, quintic):
        hodge, f = quintic
        assert hodge.primitive_hodge(f, 3) == 1
        assert hodge.primitive_hodge(f, 2) == 101
        assert hodge.primitive_hodge(f, 0) == 1

    def test_moduli(self, quintic):
        hodge, f = quintic
        assert hodge.jacobian_graded_dim(f, f.degree) == 25
        assert hodge.moduli_tangent_dim(f) == 101

    def test_certificates(self, quintic):
        hodge, f = quintic
        assert hodge.quasi_smooth(f).passed
        assert hodge.nondegenerate(f).passed
