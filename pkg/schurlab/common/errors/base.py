"""common.errors.base

Base error definitions and constants for schurlab.
Every error raised by the library derives from LabError, so that the CLI
can map it to an exit status and the API can map it to a JSON response.
"""

from typing import Any

JsonValues = int | float | str | bool | None
JsonList = list[JsonValues]
JsonDict = dict[str, JsonValues]


class ErrorConstant(str):
    """Error enums"""
    INVALID_CONFIG = "INVALID_CONFIG"
    INFEASIBLE_SCALE = "INFEASIBLE_SCALE"
    SELFTEST_FAILED = "SELFTEST_FAILED"
    PRECONDITION = "PRECONDITION"
    MODE_MISMATCH = "MODE_MISMATCH"
    WINDOW_OVERFLOW = "WINDOW_OVERFLOW"
    DIVERGENT = "DIVERGENT"
    NOT_CERTIFIED = "NOT_CERTIFIED"
    NUMERICAL = "NUMERICAL"
    SERVER_ERROR = "SERVER_ERROR"


class LabError(Exception):
    """Base class for all lab errors.

    `exit_code` is what the command-line driver returns when the error
    escapes a run; `status_code` is what the HTTP surface responds with.
    """
    exit_code: int = 1
    status_code: int = 500
    message: str
    error_code: ErrorConstant
    details: JsonDict

    def __init__(
            self,
            message: str,
            error_code: str = ErrorConstant.SERVER_ERROR,
            **details
    ) -> None:
        super().__init__(message)
        self.message = message
        self.error_code = ErrorConstant(error_code)
        self.details = details

    def to_dict(self) -> dict[str, Any]:
        """Convert the error to a dictionary.

        This function is used to convert the error to a dictionary
        for JSON serialisation.
        """
        return {
            "message": self.message,
            "error_code": self.error_code,
            "details": self.details,
        }

    def describe(self) -> str:
        """One line for a terminal: the message and any details."""
        if not self.details:
            return self.message
        shown = ", ".join(f"{key}={value}" for key, value in self.details.items())
        return f"{self.message} ({shown})"
