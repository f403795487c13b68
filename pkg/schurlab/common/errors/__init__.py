"""common.errors

Error handling for schurlab.
"""

from werkzeug.exceptions import HTTPException, InternalServerError

from .base import ErrorConstant, JsonDict, LabError
from . import lab_errors
from .lab_errors import (
    CertificationError,
    ConfigError,
    DivergentSpecializationError,
    InfeasibleScaleError,
    IntegralityError,
    InternalError,
    ModeMismatchError,
    PreconditionError,
    QuadratureError,
    SelftestFailure,
    WindowOverflowError,
    raise_lab_error,
)

__all__ = [
    "CertificationError",
    "ConfigError",
    "DivergentSpecializationError",
    "ErrorConstant",
    "InfeasibleScaleError",
    "IntegralityError",
    "InternalError",
    "LabError",
    "ModeMismatchError",
    "PreconditionError",
    "QuadratureError",
    "SelftestFailure",
    "WindowOverflowError",
    "init_app",
    "lab_errors",
    "raise_lab_error",
]


def handle_lab_error(err: LabError) -> tuple[JsonDict, int]:
    """Handle lab errors.

    This function is used to handle lab errors and return
    standardised JSON responses.
    """
    return err.to_dict(), err.status_code


def handle_werkzeug_error(err: HTTPException) -> tuple[JsonDict, int]:
    """Handle werkzeug errors.

    Reference: https://flask.palletsprojects.com/en/stable/errorhandling/
    """
    match err:
        case InternalServerError():
            return InternalError().to_dict(), 500
        case _:
            return {
                "message": err.description or err.name,
                "error_code": ErrorConstant.INVALID_CONFIG,
                "details": {},
            }, err.code or 500


def init_app(app):
    """Initialise the error handling for the app.

    This function is used to register the error handlers for the app.
    """
    app.register_error_handler(HTTPException, handle_werkzeug_error)
    app.register_error_handler(LabError, handle_lab_error)
