"""
torica

Toric varieties in homogeneous coordinates: complete simplicial fans, class
groups and Cox rings, support polytopes, Jacobian rings and the Hodge
numbers of quasi-smooth ample hypersurfaces, in exact arithmetic.
"""

__version__ = "1.0.0"

from torica.domain.exceptions import ToricaError
from torica.domain.models import ClassGroup, DivisorClass, Fan, GradedPolynomial
from torica.domain.services.coxring_service import CoxRingService
from torica.domain.services.divisor_service import DivisorService
from torica.domain.services.fan_service import FanService
from torica.domain.services.forms_service import FormsService
from torica.domain.services.hodge_service import HodgeService

__all__ = [
    "ClassGroup",
    "CoxRingService",
    "DivisorClass",
    "DivisorService",
    "Fan",
    "FanService",
    "FormsService",
    "GradedPolynomial",
    "HodgeService",
    "ToricaError",
]
