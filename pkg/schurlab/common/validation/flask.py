"""common.validation.flask

Validation of flask request bodies and responses against parameter schemas.
"""

from json import JSONDecodeError
from typing import Any, Mapping, NoReturn, Protocol

from flask import has_request_context, request as flask_request

from schurlab.common.validation import record

JsonObject = dict[str, Any]
StatusCode = int
# The lab API sticks to JSON-serializable return values, with a status code
JsonResponse = tuple[dict[str, Any], StatusCode]


class ErrorHandler(Protocol):
    """Define an ErrorHandler as a function that takes a status code and
    optional keyword arguments.

    Error Handlers must raise an exception.
    """
    def __call__(self, status: StatusCode, **body) -> NoReturn:
        ...


def get_request_json() -> JsonObject:
    """Get the JSON body of the current Flask request.

    An empty body is read as an empty object.
    """
    if not has_request_context():
        raise RuntimeError("Request context not available")
    if not flask_request.get_data():
        return {}
    payload = flask_request.get_json(silent=True)
    if not isinstance(payload, dict):
        raise JSONDecodeError("Request body must be a JSON object", "", 0)
    return payload


def validate_request_and_extract_json(
        schema: Mapping[str, type], *,
        on_error: ErrorHandler,
        total: bool = True,
        coerce: bool = False,
) -> JsonObject:
    """Validate the request JSON body against the provided schema before
    returning the payload.

    With `coerce`, string values (such as "1/5" for a rational) are first
    converted to the schema types.
    """
    try:
        payload = get_request_json()
        if coerce:
            payload = record.coerce_record(payload, schema)
        record.validate_keys(
            payload,
            schema,
            ignore_extra=False,
            total=total,
        )
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as err:
        on_error(400, message=str(err.args[0]))
    return payload


def validate_json_response(
        schema: Mapping[str, type],
        resp_json: Mapping[str, Any] | None, *,
        on_error: ErrorHandler,
        ignore_extra: bool = True,
) -> None:
    """Validate the response JSON body against the provided schema."""
    if resp_json is None:
        on_error(500, message="Response body must be a JSON object")
    try:
        record.validate_keys(resp_json, schema, ignore_extra=ignore_extra)
    except (KeyError, TypeError) as err:
        on_error(500, message=str(err.args[0]))
