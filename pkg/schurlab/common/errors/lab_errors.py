"""common.errors.lab_errors

Concrete error types raised by schurlab.

The first group maps onto the command-line exit statuses
(2 config error, 3 infeasible scale, 4 selftest failure); the second group
covers domain preconditions of the numeric and combinatorial routines.
"""

from typing import NoReturn

from .base import ErrorConstant, LabError


def raise_lab_error(status: int, **body) -> NoReturn:
    """Raise a lab error matching the given HTTP status code.

    A `message` in the body replaces the generic one.
    """
    match status:
        case 400:
            raise ConfigError(
                message=body.pop("message", "Bad request"),
                status=status,
                **body
            )
        case 422:
            raise InfeasibleScaleError(
                message=body.pop("message", "Infeasible scale"),
                status=status,
                **body
            )
        case 500:
            raise InternalError(
                message=body.pop("message", "Internal server error"),
                status=status,
                **body
            )
    raise ValueError(
        f"Unexpected status code: {status}"
    )


class InternalError(LabError):
    """Internal error.

    The lab hit a condition that indicates a bug rather than bad input.
    """
    status_code: int = 500

    def __init__(
            self,
            message: str = "Internal server error",
            error_code: str = ErrorConstant.SERVER_ERROR,
            **details
    ) -> None:
        super().__init__(message, error_code, **details)


class ConfigError(LabError):
    """Invalid experiment configuration.

    E.g. missing parameters, wrong types, values outside a module's
    preconditions.
    """
    exit_code: int = 2
    status_code: int = 400

    def __init__(
            self,
            message: str = "Invalid configuration",
            error_code: str = ErrorConstant.INVALID_CONFIG,
            **details
    ) -> None:
        super().__init__(message, error_code, **details)


class PreconditionError(ConfigError):
    """A routine was called outside its documented domain."""

    def __init__(
            self,
            message: str = "Precondition violated",
            error_code: str = ErrorConstant.PRECONDITION,
            **details
    ) -> None:
        super().__init__(message, error_code, **details)


class ModeMismatchError(PreconditionError):
    """Exact and approximate scalars were mixed in one operation."""

    def __init__(
            self,
            message: str = "Arithmetic mode mismatch",
            error_code: str = ErrorConstant.MODE_MISMATCH,
            **details
    ) -> None:
        super().__init__(message, error_code, **details)


class WindowOverflowError(PreconditionError):
    """A Laurent window or truncation order is out of range."""

    def __init__(
            self,
            message: str = "Series window out of range",
            error_code: str = ErrorConstant.WINDOW_OVERFLOW,
            **details
    ) -> None:
        super().__init__(message, error_code, **details)


class DivergentSpecializationError(PreconditionError):
    """A specialization pair leaves the region of convergence."""

    def __init__(
            self,
            message: str = "Divergent specialization",
            error_code: str = ErrorConstant.DIVERGENT,
            **details
    ) -> None:
        super().__init__(message, error_code, **details)


class InfeasibleScaleError(LabError):
    """The requested size exceeds what an exhaustive oracle can handle."""
    exit_code: int = 3
    status_code: int = 422

    def __init__(
            self,
            message: str = "Infeasible scale",
            error_code: str = ErrorConstant.INFEASIBLE_SCALE,
            **details
    ) -> None:
        super().__init__(message, error_code, **details)


class CertificationError(LabError):
    """A truncation cannot certify the requested accuracy."""
    exit_code: int = 3
    status_code: int = 422

    def __init__(
            self,
            message: str = "Truncation cannot certify requested accuracy",
            error_code: str = ErrorConstant.NOT_CERTIFIED,
            **details
    ) -> None:
        super().__init__(message, error_code, **details)


class QuadratureError(LabError):
    """Non-finite values appeared in a numerical evaluation."""

    def __init__(
            self,
            message: str = "Quadrature failure",
            error_code: str = ErrorConstant.NUMERICAL,
            **details
    ) -> None:
        super().__init__(message, error_code, **details)


class IntegralityError(InternalError):
    """A closed form that must be an integer was not."""


class SelftestFailure(LabError):
    """An oracle-equivalence check failed."""
    exit_code: int = 4
    status_code: int = 500

    def __init__(
            self,
            message: str = "Selftest failed",
            error_code: str = ErrorConstant.SELFTEST_FAILED,
            **details
    ) -> None:
        super().__init__(message, error_code, **details)
