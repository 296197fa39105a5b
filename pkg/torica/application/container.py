from __future__ import annotations

import argparse
import logging
import os
from dataclasses import dataclass
from typing import Mapping, Optional

from torica.adapters.cli_user_interface_adapter import CLIUserInterfaceAdapter
from torica.adapters.console_progress_adapter import ConsoleProgressAdapter
from torica.adapters.json_model_adapter import JsonModelAdapter
from torica.domain.exceptions import ConfigurationError
from torica.domain.models import Fan, OutputFormat, RunConfig
from torica.domain.services.coxring_service import CoxRingService
from torica.domain.services.divisor_service import DivisorService
from torica.domain.services.fan_service import FanService
from torica.domain.services.forms_service import FormsService
from torica.domain.services.hodge_service import HodgeService
from torica.domain.services.settings_service import SettingsService, create_settings_service

logger = logging.getLogger(__name__)


@dataclass(slots=True)
class DomainServices:
    """Services bound to one validated fan."""

    fan: Fan
    fans: FanService
    ring: CoxRingService
    divisors: DivisorService
    hodge: HodgeService
    forms: FormsService


@dataclass(slots=True)
class Container:
    settings: SettingsService
    config: RunConfig
    models: JsonModelAdapter
    progress: ConsoleProgressAdapter
    ui: CLIUserInterfaceAdapter

    def fan_service(self) -> FanService:
        return FanService(direction_samples=self.config.direction_samples, seed=self.config.seed)

    def services_for(self, fan: Fan, validate: bool = True) -> DomainServices:
        """Wire the domain services for a fan.

        Raises:
            FanValidationError: If ``validate`` is set and the fan is invalid.
        """
        fans = self.fan_service()
        if validate:
            fans.require_valid(fan)
        ring = CoxRingService(fan)
        divisors = DivisorService(ring, fans)
        hodge = HodgeService(
            ring,
            fans,
            divisors,
            budget=self.config.budget,
            quasi_smooth_method=self.config.quasi_smooth_method,
            unsafe_skip_checks=self.config.unsafe_skip_checks,
            progress=self.progress,
        )
        return DomainServices(fan, fans, ring, divisors, hodge, FormsService(ring, divisors))


def resolve_run_config(settings: SettingsService, args: argparse.Namespace) -> RunConfig:
    """Settings first, then command-line flags.

    Raises:
        ConfigurationError: If the resolved budget is not positive.
    """
    command = tuple(part for part in (args.command, getattr(args, "action", None)) if part)
    inputs = tuple(str(p) for p in (getattr(args, "fan", None), getattr(args, "poly", None)) if p)
    budget = args.budget if args.budget is not None else settings.get("groebner.budget")
    if budget <= 0:
        raise ConfigurationError(f"budget must be positive, got {budget}")
    return RunConfig(
        command=command,
        inputs=inputs,
        budget=budget,
        seed=args.seed if args.seed is not None else settings.get("random.seed"),
        output_format=OutputFormat(args.format or settings.get("output.format")),
        unsafe_skip_checks=args.unsafe_skip_checks,
        quasi_smooth_method=args.method or settings.get("groebner.quasi_smooth_method"),
        direction_samples=settings.get("fan.direction_samples"),
        divisor=getattr(args, "b", None),
    )


def build_container(args: argparse.Namespace, environ: Optional[Mapping[str, str]] = None) -> Container:
    """Build the application container.

    Raises:
        ConfigurationError: If any settings layer is invalid.
    """
    settings = create_settings_service(args.config, environ if environ is not None else os.environ)
    config = resolve_run_config(settings, args)
    logger.debug("Resolved run config: %s", config)
    return Container(
        settings=settings,
        config=config,
        models=JsonModelAdapter(),
        progress=ConsoleProgressAdapter(),
        ui=CLIUserInterfaceAdapter(),
    )
