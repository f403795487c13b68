"""lab.config

Experiment configuration: a flat `key = value` file merged under the
command-line flags, coerced to the subcommand's parameter schema and checked
before dispatch.
"""

import logging
from pathlib import Path
from typing import Any, Mapping, NamedTuple

from schurlab.common.errors import ConfigError
from schurlab.common.schema import CSV, JSON
from schurlab.common.validation import record

from .experiments import Experiment, Params, RunContext

logger = logging.getLogger(__name__)

GLOBAL_KEYS = ("seed", "threads", "format", "out")
MAX_SEED = 2 ** 64 - 1


class RunConfig(NamedTuple):
    """Everything needed to replay one run."""
    experiment: Experiment
    params: Params
    context: RunContext
    output_format: str
    out: Path | None

    def as_record(self) -> dict[str, Any]:
        """The full config embedded in artifacts."""
        return {
            "subcommand": self.experiment.name,
            **self.params,
            "seed": self.context.seed,
            "format": self.output_format,
        }


def parse_config_text(text: str, source: str = "<config>") -> dict[str, str]:
    """Read `key = value` lines; `#` starts a comment.

    Raises:
        ConfigError: On a line without `=` or a repeated key.
    """
    values: dict[str, str] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or not key:
            raise ConfigError(f"{source}:{number}: expected 'key = value'", line=number)
        if key in values:
            raise ConfigError(f"{source}:{number}: repeated key '{key}'", key=key)
        values[key] = value.strip()
    return values


def load_config_file(path: str | Path) -> dict[str, str]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as err:
        raise ConfigError(f"cannot read config file {path}: {err.strerror}", path=str(path)) from err
    return parse_config_text(text, str(path))


def _global_int(values: Mapping[str, Any], key: str, default: int, low: int, high: int) -> int:
    raw = values.get(key, default)
    try:
        value = int(raw)
    except (TypeError, ValueError) as err:
        raise ConfigError(f"{key} must be an integer, got {raw!r}", key=key) from err
    if not low <= value <= high:
        raise ConfigError(f"{key} must lie in [{low}, {high}], got {value}", key=key)
    return value


def build_config(
        experiment: Experiment,
        file_values: Mapping[str, Any] | None = None,
        flag_values: Mapping[str, Any] | None = None,
        *,
        default_threads: int = 1,
) -> RunConfig:
    """Merge defaults, file and flags (flags win) and validate the result.

    Raises:
        ConfigError: If a key is unknown, a value has the wrong type, or a
            parameter is outside the subcommand's preconditions.
    """
    merged: dict[str, Any] = dict(file_values or {})
    merged.update({k: v for k, v in (flag_values or {}).items() if v is not None})
    globals_ = {key: merged.pop(key) for key in GLOBAL_KEYS if key in merged}

    schema = experiment.annotations
    params = dict(experiment.defaults)
    try:
        params.update(record.coerce_record(merged, schema))
        record.validate_keys(params, schema, ignore_extra=False)
    except (ValueError, ZeroDivisionError) as err:
        raise ConfigError(f"{experiment.name}: {err}", subcommand=experiment.name) from err
    except (KeyError, TypeError) as err:
        raise ConfigError(f"{experiment.name}: {err.args[0]}", subcommand=experiment.name) from err
    experiment.validate(params)

    output_format = str(globals_.get("format", CSV)).lower()
    if output_format not in (CSV, JSON):
        raise ConfigError(f"format must be csv or json, got {output_format!r}", format=output_format)
    context = RunContext(
        seed=_global_int(globals_, "seed", 1, 0, MAX_SEED),
        threads=_global_int(globals_, "threads", default_threads, 1, 1024),
    )
    out = globals_.get("out")
    logger.debug("config for %s: %s", experiment.name, params)
    return RunConfig(experiment, params, context, output_format, Path(out) if out else None)
