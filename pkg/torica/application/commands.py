"""Command handlers.

Each handler receives the container and returns ``(payload, exit_code)``;
rendering and error mapping happen in :func:`execute`.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Tuple

from torica.application.container import Container, DomainServices
from torica.application.logger_api import RunLogger
from torica.application.report_api import build_envelope, error_envelope, render
from torica.domain.exceptions import InputError, NotAmpleError, ToricaError
from torica.domain.models import GradedPolynomial, OutputFormat, TorusInvariantDivisor

logger = logging.getLogger(__name__)

Payload = Dict[str, Any]
Handler = Callable[[Container], Tuple[Payload, int]]


def _fan_path(container: Container) -> Path:
    return Path(container.config.inputs[0])


def _services(container: Container) -> DomainServices:
    return container.services_for(container.models.load_fan(_fan_path(container)))


def _polynomial(container: Container, services: DomainServices) -> Tuple[GradedPolynomial, TorusInvariantDivisor]:
    f, document_divisor = container.models.load_polynomial(Path(container.config.inputs[1]), services.ring)
    b = container.config.divisor or document_divisor
    return f, services.divisors.divisor(b)


def fan_check(container: Container) -> Tuple[Payload, int]:
    fan = container.models.load_fan(_fan_path(container))
    report = container.fan_service().validate_fan(fan)
    payload: Payload = {"fan": fan.to_dict(), "validation": report.to_dict()}
    if report.valid:
        verdict = container.fan_service().weighted_projective_classification(fan)
        payload["weighted_projective"] = {"kind": verdict.kind.name, "weights": list(verdict.weights)}
    return payload, 0 if report.valid else InputError.exit_code


def fan_classgroup(container: Container) -> Tuple[Payload, int]:
    services = _services(container)
    group = services.ring.group
    return {
        "free_rank": group.free_rank,
        "torsion": list(group.torsion),
        "ray_degrees": [beta.to_dict() for beta in services.ring.ray_degrees],
        "anticanonical": services.ring.anticanonical.to_dict(),
        "euler_relations": [
            [str(x) for x in phi.phi] for phi in services.ring.euler_relations_basis()
        ],
    }, 0


def fan_collections(container: Container) -> Tuple[Payload, int]:
    services = _services(container)
    fans, fan = services.fans, services.fan
    collections = fans.primitive_collections(fan)
    return {
        "primitive_collections": [list(c.indices) for c in collections],
        "z_components": [
            {"zero_indices": list(z.zero_indices), "codimension": z.codimension}
            for z in fans.z_sigma_components(fan)
        ],
        "codim_Z": fans.codim_Z(fan),
        "stanley_reisner": [list(a) for a in fans.stanley_reisner_generators(fan)],
    }, 0


def divisor_info(container: Container) -> Tuple[Payload, int]:
    services = _services(container)
    divisor = services.divisors.divisor(container.config.divisor or ())
    ample = services.divisors.is_ample(divisor)
    polytope = services.divisors.support_polytope(divisor)
    payload: Payload = {
        "divisor": list(divisor.b),
        "class": services.divisors.divisor_class(divisor).to_dict(),
        "cartier": services.divisors.is_cartier(divisor),
        "q_cartier": services.divisors.is_q_cartier(divisor),
        "ample": ample,
        "polytope": polytope.to_dict(),
        "sections": len(polytope.lattice_points),
        "faces": [face.to_dict() for face in services.divisors.polytope_faces(divisor)] if ample else [],
    }
    return payload, 0


def hodge_report(container: Container) -> Tuple[Payload, int]:
    services = _services(container)
    f, divisor = _polynomial(container, services)
    report = services.hodge.build_report(f, divisor)
    payload = report.to_dict()
    if services.fan.dim >= 2:
        payload["diamond"] = services.hodge.hodge_diamond(f).to_dict()
    return payload, 0


def moduli(container: Container) -> Tuple[Payload, int]:
    services = _services(container)
    f, _ = _polynomial(container, services)
    return {
        "degree": f.degree.to_dict(),
        "moduli_tangent_dim": services.hodge.moduli_tangent_dim(f),
        "aut_dimension": services.hodge.aut_dimension(),
    }, 0


def certify_quasismooth(container: Container) -> Tuple[Payload, int]:
    services = _services(container)
    f, _ = _polynomial(container, services)
    certificate = services.hodge.quasi_smooth(f)
    return {"certificate": certificate.to_dict()}, 0 if certificate.passed else 1


def certify_nondegenerate(container: Container) -> Tuple[Payload, int]:
    services = _services(container)
    f, divisor = _polynomial(container, services)
    if not services.divisors.is_ample(divisor):
        raise NotAmpleError(f"divisor {list(divisor.b)} is not ample")
    certificate = services.hodge.nondegenerate(f, divisor)
    return {"certificate": certificate.to_dict()}, 0 if certificate.passed else 1


def forms_verify(container: Container) -> Tuple[Payload, int]:
    services = _services(container)
    f: Optional[GradedPolynomial] = None
    expected = None
    if len(container.config.inputs) > 1:
        f, _ = _polynomial(container, services)
        expected = services.hodge.global_dminus1_forms_dim(f.degree)
    results = services.forms.verify(f, seed=container.config.seed, expected_dminus1=expected)
    passed = all(r.passed for r in results)
    return {"checks": [r.to_dict() for r in results], "passed": passed}, 0 if passed else 1


COMMANDS: Dict[Tuple[str, ...], Handler] = {
    ("fan", "check"): fan_check,
    ("fan", "classgroup"): fan_classgroup,
    ("fan", "collections"): fan_collections,
    ("divisor", "info"): divisor_info,
    ("hodge",): hodge_report,
    ("moduli",): moduli,
    ("certify", "quasismooth"): certify_quasismooth,
    ("certify", "nondegenerate"): certify_nondegenerate,
    ("forms", "verify"): forms_verify,
}


def execute(container: Container, run_logger: Optional[RunLogger] = None) -> int:
    """Run the configured command, print its report and return the exit code."""
    config = container.config
    name = " ".join(config.command)
    handler = COMMANDS[config.command]
    color = config.output_format is OutputFormat.TABLE and container.ui.stdout.isatty()
    if run_logger:
        run_logger.log_command_start(name)
    try:
        payload, exit_code = handler(container)
    except ToricaError as exc:
        if run_logger:
            run_logger.log_command_failed(name, exc)
        if config.output_format is OutputFormat.JSON:
            container.ui.output(render(error_envelope(config.command, exc), config.output_format))
        container.ui.error(f"{type(exc).__name__}: {exc}")
        return exc.exit_code
    if run_logger:
        run_logger.log_command_complete(name)
    envelope = build_envelope(config.command, payload, certified=not config.unsafe_skip_checks)
    container.ui.output(render(envelope, config.output_format, color))
    return exit_code
