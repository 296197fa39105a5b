"""Shared fans and services for the test suite."""

from __future__ import annotations

import pytest

from torica.domain.models import Fan
from torica.domain.services.coxring_service import CoxRingService
from torica.domain.services.divisor_service import DivisorService
from torica.domain.services.fan_builders import product_of_fans, projective_space, weighted_projective
from torica.domain.services.fan_service import FanService
from torica.domain.services.forms_service import FormsService
from torica.domain.services.hodge_service import HodgeService


@pytest.fixture
def p1() -> Fan:
    return projective_space(1)


@pytest.fixture
def p2() -> Fan:
    return projective_space(2)


@pytest.fixture
def p3() -> Fan:
    return projective_space(3)


@pytest.fixture
def p4() -> Fan:
    return projective_space(4)


@pytest.fixture
def p1xp1(p1: Fan) -> Fan:
    return product_of_fans(p1, p1)


@pytest.fixture
def p112() -> Fan:
    return weighted_projective((1, 1, 2))


@pytest.fixture
def fan_service() -> FanService:
    return FanService()


@pytest.fixture
def p2_ring(p2: Fan) -> CoxRingService:
    return CoxRingService(p2)


@pytest.fixture
def p1xp1_ring(p1xp1: Fan) -> CoxRingService:
    return CoxRingService(p1xp1)


@pytest.fixture
def p112_ring(p112: Fan) -> CoxRingService:
    return CoxRingService(p112)


@pytest.fixture
def p2_hodge(p2_ring: CoxRingService) -> HodgeService:
    return HodgeService(p2_ring)


@pytest.fixture
def p1xp1_hodge(p1xp1_ring: CoxRingService) -> HodgeService:
    return HodgeService(p1xp1_ring)


@pytest.fixture
def p2_divisors(p2_ring: CoxRingService) -> DivisorService:
    return DivisorService(p2_ring)


@pytest.fixture
def p1xp1_divisors(p1xp1_ring: CoxRingService) -> DivisorService:
    return DivisorService(p1xp1_ring)


@pytest.fixture
def p2_forms(p2_ring: CoxRingService) -> FormsService:
    return FormsService(p2_ring)


@pytest.fixture
def p1xp1_forms(p1xp1_ring: CoxRingService) -> FormsService:
    return FormsService(p1xp1_ring)
