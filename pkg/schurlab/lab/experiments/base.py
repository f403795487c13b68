"""lab.experiments.base

The shape shared by every experiment: a parameter schema (a TypedDict), its
defaults, a range check, the table-producing run and a selftest.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, NamedTuple

from schurlab.common.errors import ConfigError

Params = dict[str, Any]


@dataclass(frozen=True)
class RunContext:
    """Run-wide settings that are not experiment parameters."""
    seed: int = 1
    threads: int = 1


@dataclass
class Table:
    """Rows of one run, with an optional summary embedded next to the config."""
    columns: list[str]
    rows: list[dict[str, Any]]
    summary: dict[str, Any] = field(default_factory=dict)


class Check(NamedTuple):
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class Experiment:
    name: str
    summary: str
    schema: type
    defaults: Params
    columns: tuple[str, ...]
    run: Callable[[Params, RunContext], Table]
    validate: Callable[[Params], None]
    selftest: Callable[[], list[Check]]
    # experiments whose table depends on the mode parameter list it per mode
    mode_columns: dict[str, tuple[str, ...]] = field(default_factory=dict)

    @property
    def annotations(self) -> dict[str, type]:
        return dict(self.schema.__annotations__)

    def columns_for(self, params: Params) -> tuple[str, ...]:
        return self.mode_columns.get(params.get("mode"), self.columns)

    def column_help(self) -> str:
        if not self.mode_columns:
            return "CSV columns: " + ", ".join(self.columns)
        return "CSV columns by mode: " + "; ".join(
            f"{mode}: {', '.join(columns)}" for mode, columns in self.mode_columns.items()
        )


def require(condition: bool, message: str, **details) -> None:
    """Raise ConfigError with the message unless the condition holds."""
    if not condition:
        raise ConfigError(message, **details)


def check(name: str, passed: bool, detail: str = "") -> Check:
    return Check(name, bool(passed), detail)
