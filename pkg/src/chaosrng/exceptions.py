"""Chaosrng exception hierarchy.

This module defines the exceptions raised by chaosrng, providing specific
exception types for the different failure modes of orbit generation,
sampling and verification.
"""

__all__ = (
    "ChaosError",
    "ConfigurationError",
    "DegenerateOrbitError",
    "DivergenceError",
    "DomainError",
    "InsufficientDataError",
    "NumericalError",
    "SingularPointError",
    "SupportError",
    "UnsupportedMapError",
    "VerificationError",
    "ZeroVarianceError",
)


class ChaosError(Exception):
    """Base exception for all chaosrng errors.

    This is the root exception class for the package. All other exceptions
    inherit from it, so callers can catch every chaosrng failure with a
    single handler.

    Example:
        Catch all chaosrng errors::

            try:
                batch = generator.sample(spec, 10_000)
            except ChaosError as e:
                logger.error("Generation failed: %s", e)
    """


class ConfigurationError(ChaosError, ValueError):
    """Invalid configuration, flag combination or registry name.

    Raised when an :class:`~chaosrng.config.OrbitConfig` or another config
    object violates its invariants, or when a map or distribution name is
    not registered. The command line maps this error to exit code 1.

    Example:
        Handle a bad registry name::

            try:
                chaotic_map = get_map("bernoulli")
            except ConfigurationError as e:
                logger.error("Unknown map: %s", e)
    """


class DomainError(ChaosError, ValueError):
    """An input lies outside the domain of a map, law or distribution.

    Example:
        Guard a single step::

            try:
                step_logistic(1.5, 4.0)
            except DomainError:
                ...
    """


class NumericalError(ChaosError):
    """Base class for numerical failures during iteration or inversion.

    The command line maps this error and its subclasses to exit code 2.
    """


class DivergenceError(NumericalError):
    """An orbit escaped to infinity or produced a non-finite state.

    Raised for the Hénon map when ``|x|`` exceeds the escape bound under the
    ``halt`` reseed policy, or when a step returns ``inf``/``nan``.
    """


class DegenerateOrbitError(NumericalError):
    """An orbit reached a degenerate state under the ``halt`` policy.

    Example:
        Inspect where the orbit degenerated::

            try:
                orbit(GaussMap(), OrbitConfig(seed=1, length=10, reseed_policy="halt"), initial=0.25)
            except DegenerateOrbitError as e:
                print(e.step, e.state)
    """

    step: int
    state: object

    def __init__(self, message: str, step: int, state: object) -> None:
        """Initialize degenerate orbit error.

        Args:
            message: Error description.
            step: Iteration index at which the degeneracy was detected.
            state: The degenerate state.
        """
        super().__init__(message)
        self.step = step
        self.state = state


class SingularPointError(NumericalError):
    """A Frobenius-Perron term is singular because ``|T'|`` vanishes at a preimage."""


class SupportError(NumericalError):
    """A value cannot be mapped inside the support of a law or distribution.

    Raised by the generalised inverse at ``u = 0`` or ``u = 1`` when the
    support is unbounded on that side, and by uniformisation when orbit
    values fall outside the support of the invariant law.
    """


class InsufficientDataError(ChaosError, ValueError):
    """Too few samples, iterates or dimensions for the requested operation."""


class ZeroVarianceError(ChaosError, ValueError):
    """The input sample has zero variance, so normalised statistics are undefined."""


class UnsupportedMapError(ChaosError, ValueError):
    """The map does not support the requested operation.

    For example the Hénon map has no closed-form invariant density, so
    Frobenius-Perron residuals and uniformisation are unavailable for it.
    """


class VerificationError(ChaosError):
    """One or more verification checks failed.

    The command line maps this error to exit code 3.
    """

    failed: list[str]

    def __init__(self, message: str, failed: list[str] | None = None) -> None:
        """Initialize verification error.

        Args:
            message: Error description.
            failed: Names of the failed checks.
        """
        super().__init__(message)
        self.failed = failed or []
