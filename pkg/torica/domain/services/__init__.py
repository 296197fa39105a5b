"""Service package for domain layer services.

Exports service classes for convenient imports.
"""

from .coxring_service import CoxRingService
from .divisor_service import DivisorService
from .fan_service import FanService
from .forms_service import FormsService
from .groebner_service import GroebnerService, MultiPoly
from .hodge_service import HodgeService, JacobianVariant
from .settings_service import SettingsService, create_settings_service

__all__ = [
    "CoxRingService",
    "DivisorService",
    "FanService",
    "FormsService",
    "GroebnerService",
    "MultiPoly",
    "HodgeService",
    "JacobianVariant",
    "SettingsService",
    "create_settings_service",
]
