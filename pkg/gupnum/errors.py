"""Exception hierarchy shared by the numerics and the experiment runner."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from gupnum.models.quadrature import IntegralResult


class GupError(Exception):
    """Base class for every failure raised by gupnum."""


class ConfigError(GupError, ValueError):
    """An experiment configuration could not be resolved."""


class DomainError(GupError, ValueError):
    """An argument lies outside the domain of the requested quantity."""


class RangeError(DomainError):
    """A sampled state was evaluated outside its sample range."""


class ProfileDomainError(DomainError):
    """A position profile was requested too close to its log singularity."""

    def __init__(self, x: float, singular_at: float, min_offset: float):
        self.x = x
        self.singular_at = singular_at
        self.min_offset = min_offset
        super().__init__(
            f"profile diverges logarithmically at x={singular_at:g}; "
            f"keep |x - {singular_at:g}| >= {min_offset:g} (got x={x:g})"
        )


class DerivativeUnavailableError(GupError):
    """The state carries too little information to differentiate."""


class QuadratureError(GupError):
    """Adaptive quadrature did not reach the requested tolerance."""

    def __init__(self, reason: str, best: IntegralResult | None = None):
        self.reason = reason
        self.best = best
        message = reason
        if best is not None:
            message += (
                f" (best estimate {best.value:.6g} +/- {best.error_estimate:.3g}"
                f" after {best.evaluations} evaluations)"
            )
        super().__init__(message)


class GramAssemblyError(QuadratureError):
    """A Gram matrix entry failed to integrate."""

    def __init__(self, n: int, n_prime: int, cause: QuadratureError):
        self.n = n
        self.n_prime = n_prime
        super().__init__(f"entry ({n}, {n_prime}): {cause.reason}", cause.best)


class NonNormalizableStateError(GupError):
    """The state has no finite norm under the chosen measure."""


class DivergentMomentError(GupError):
    """A moment integral needed by an uncertainty report diverges."""

    def __init__(self, moment: str, cause: QuadratureError):
        self.moment = moment
        super().__init__(f"moment <{moment}> diverges: {cause.reason}")


class DivergentIntegralError(GupError):
    """An integral is divergent as posed (e.g. a missing cutoff)."""
