"""Custom exception hierarchy for torica.

Every error raised by the package derives from ``ToricaError``. Each class
carries the process exit code the CLI maps it to, and ``to_dict`` gives the
machine-readable error object emitted in JSON mode.
"""

from __future__ import annotations

from typing import Any, Dict, Optional, Sequence


class ToricaError(Exception):
    """Base exception for all torica-specific errors."""

    exit_code: int = 1

    def details(self) -> Dict[str, Any]:
        return {}

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"error": type(self).__name__, "message": str(self)}
        payload.update(self.details())
        return payload


# Input errors (exit code 2)


class InputError(ToricaError):
    """Malformed or inconsistent user input."""

    exit_code = 2


class ConfigurationError(InputError):
    """Configuration-related errors."""
    pass


class FanFormatError(InputError):
    """Fan JSON document does not follow the fan format."""
    pass


class PolynomialFormatError(InputError):
    """Polynomial JSON document does not follow the polynomial format."""
    pass


class ClassGroupMismatchError(InputError):
    """Divisor classes from two different class groups were combined."""
    pass


class DivisorFormatError(InputError):
    """Divisor coefficient vector of the wrong length."""
    pass


class InvalidWeightsError(InputError):
    """Weights cannot be realized as a weighted projective fan."""
    pass


class FanValidationError(InputError):
    """A fan violates one of the defining conditions."""
    pass


class InvalidFanStructureError(FanValidationError):
    """Cone indices out of range, repeated, or of the wrong size."""
    pass


class NonPrimitiveRayError(FanValidationError):
    def __init__(self, index: int, ray: Sequence[int]):
        super().__init__(f"ray {index} = {list(ray)} is not primitive")
        self.index = index
        self.ray = tuple(ray)

    def details(self) -> Dict[str, Any]:
        return {"ray_index": self.index, "ray": list(self.ray)}


class DuplicateRayError(FanValidationError):
    def __init__(self, first: int, second: int):
        super().__init__(f"rays {first} and {second} coincide")
        self.first = first
        self.second = second

    def details(self) -> Dict[str, Any]:
        return {"ray_indices": [self.first, self.second]}


class DegenerateConeError(FanValidationError):
    def __init__(self, cone: Sequence[int]):
        super().__init__(f"cone {list(cone)} is not full-dimensional simplicial")
        self.cone = tuple(cone)

    def details(self) -> Dict[str, Any]:
        return {"cone": list(self.cone)}


class BadIntersectionError(FanValidationError):
    def __init__(self, first: Sequence[int], second: Sequence[int]):
        super().__init__(
            f"cones {list(first)} and {list(second)} do not meet in a common face"
        )
        self.first = tuple(first)
        self.second = tuple(second)

    def details(self) -> Dict[str, Any]:
        return {"cones": [list(self.first), list(self.second)]}


class NotCompleteError(FanValidationError):
    def __init__(self, message: str, witness: Optional[Sequence[Any]] = None):
        super().__init__(message)
        self.witness = tuple(witness) if witness is not None else None

    def details(self) -> Dict[str, Any]:
        if self.witness is None:
            return {}
        return {"witness": [str(w) for w in self.witness]}


# Mathematical precondition failures (exit code 1)


class PreconditionError(ToricaError):
    """A mathematical precondition of an operation does not hold."""

    exit_code = 1


class RankDeficientError(PreconditionError):
    """The rays do not span N_R."""
    pass


class NotAmpleError(PreconditionError):
    pass


class NotQuasiSmoothError(PreconditionError):
    pass


class NotNondegenerateError(PreconditionError):
    pass


class EmptyDegreeError(PreconditionError):
    """The requested graded piece of the Cox ring is zero."""
    pass


class InconsistentRelationError(PreconditionError):
    """Monomials of one degree disagree on an Euler constant."""
    pass


class DivisionByVariableError(PreconditionError):
    """A form conversion needed to divide by a variable that does not divide."""
    pass


class NotInImageError(PreconditionError):
    """A differential form does not come from S tensor Lambda^p M."""
    pass


class TheoremConsistencyError(ToricaError):
    """A computed quantity contradicts a theorem it is supposed to realize."""

    exit_code = 1


class InternalInvariantViolation(ToricaError):
    exit_code = 1


class BudgetExceededError(ToricaError):
    """The Groebner reduction budget ran out."""

    exit_code = 3

    def __init__(self, budget: int, context: Optional[str] = None):
        message = f"Groebner budget of {budget} reductions exceeded"
        if context:
            message += f" ({context})"
        super().__init__(message)
        self.budget = budget
        self.context = context

    def details(self) -> Dict[str, Any]:
        return {"budget": self.budget, "context": self.context}
