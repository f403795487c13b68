"""common.utils.tables

Serialisation of result tables.

Numbers are written in a fixed textual form so that a replayed run is
byte-identical: exact rationals as "p/q" (or "p"), doubles as their
shortest round-trip repr, booleans as true/false.
"""

import csv
import io
import json
import math
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from typing import Any

Row = Mapping[str, Any]


def format_scalar(value: Any) -> str:
    """Render a table cell as text."""
    match value:
        case None:
            return ""
        case bool():
            return "true" if value else "false"
        case Fraction():
            if value.denominator == 1:
                return str(value.numerator)
            return f"{value.numerator}/{value.denominator}"
        case float():
            if math.isnan(value):
                return "nan"
            if math.isinf(value):
                return "inf" if value > 0 else "-inf"
            return repr(value)
        case int():
            return str(value)
        case list() | tuple():
            return " ".join(format_scalar(item) for item in value)
    return str(value)


def json_value(value: Any) -> Any:
    """Convert a cell into a JSON-native value.

    Fractions that are not integers become their "p/q" string; non-finite
    doubles become strings.
    """
    match value:
        case bool() | None | str():
            return value
        case Fraction():
            if value.denominator == 1:
                return value.numerator
            return format_scalar(value)
        case float():
            return value if math.isfinite(value) else format_scalar(value)
        case int():
            return value
        case Mapping():
            return {str(k): json_value(v) for k, v in value.items()}
        case list() | tuple():
            return [json_value(item) for item in value]
    return str(value)


def rows_to_csv(columns: Sequence[str], rows: Iterable[Row]) -> str:
    """Render rows as RFC-4180 CSV with a header line."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_scalar(row.get(column)) for column in columns])
    return buffer.getvalue()


def rows_to_json(
        columns: Sequence[str],
        rows: Iterable[Row],
        config: Mapping[str, Any],
) -> str:
    """Render rows as a JSON document that embeds the run configuration."""
    document = {
        "config": json_value(dict(config)),
        "columns": list(columns),
        "rows": [
            {column: json_value(row.get(column)) for column in columns}
            for row in rows
        ],
    }
    return json.dumps(document, indent=2, sort_keys=False) + "\n"
