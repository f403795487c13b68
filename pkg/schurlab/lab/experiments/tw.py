"""lab.experiments.tw

The Tracy-Widom distribution F2 over a grid of s, with the Nystrom
self-convergence column, and its mean.
"""

from typing import TypedDict

from schurlab.airy import f2_mean, f2_table, s_grid
from schurlab.airy.fredholm import MIN_ORDER, MIN_S

from .base import Experiment, Params, RunContext, Table, check, require

MAX_POINTS = 2000
MAX_ORDER = 400


class TwParams(TypedDict):
    smin: float | int
    smax: float | int
    step: float | int
    m: int
    mean: bool


DEFAULTS: Params = {"smin": -8.0, "smax": 4.0, "step": 0.5, "m": 80, "mean": False}
COLUMNS = ("s", "f2", "convergence")


def validate(params: Params) -> None:
    smin, smax, step = params["smin"], params["smax"], params["step"]
    require(smin >= MIN_S, f"smin must be at least {MIN_S}", smin=smin)
    require(smax >= smin and step > 0, "the grid needs smax >= smin and step > 0")
    require((smax - smin) / step < MAX_POINTS, f"the grid is limited to {MAX_POINTS} points")
    require(MIN_ORDER <= params["m"] <= MAX_ORDER, f"m must lie in [{MIN_ORDER}, {MAX_ORDER}]", m=params["m"])


def run(params: Params, ctx: RunContext) -> Table:
    grid = s_grid(float(params["smin"]), float(params["smax"]), float(params["step"]))
    rows = [
        {"s": value.s, "f2": value.value, "convergence": value.convergence}
        for value in f2_table(grid, params["m"])
    ]
    summary = {}
    if params["mean"]:
        summary["mean"] = f2_mean(float(params["smin"]), float(params["smax"]), float(params["step"]))
    return Table(list(COLUMNS), rows, summary)


def selftest() -> list:
    table = run({"smin": -4.0, "smax": 2.0, "step": 1.0, "m": 40, "mean": False}, RunContext())
    values = [row["f2"] for row in table.rows]
    return [
        check("F2 increasing", all(a < b for a, b in zip(values, values[1:]))),
        check("F2 settled at m = 40", max(row["convergence"] for row in table.rows) < 1e-6),
    ]


EXPERIMENT = Experiment(
    "tw",
    "Tracy-Widom F2 over an s-grid",
    TwParams, DEFAULTS, COLUMNS, run, validate, selftest,
)
