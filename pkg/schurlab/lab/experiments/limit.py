"""lab.experiments.limit

Edge scaling of the exponential-specialization kernel: the scaled kernel
blocks at floored edge points against the Airy kernel, over several xi.
"""

from typing import TypedDict

from schurlab.airy import airy_kernel, correlation_probe, edge_centre, edge_point, edge_width, probe_grid

from .base import Experiment, Params, RunContext, Table, check, require

MAX_XI = 1e7


class LimitParams(TypedDict):
    xis: list[float | int]
    xs: list[float | int]


DEFAULTS: Params = {"xis": [1e4, 1e5], "xs": [-1.0, 0.0, 1.0]}
COLUMNS = ("xi", "x", "y", "plus_plus", "mixed", "minus_minus", "airy", "gap")


def validate(params: Params) -> None:
    require(len(params["xis"]) > 0 and len(params["xs"]) > 0, "xis and xs must be nonempty")
    require(all(0 < xi <= MAX_XI for xi in params["xis"]), f"xi must lie in (0, {MAX_XI:g}]")
    require(all(-8 <= x <= 8 for x in params["xs"]), "edge coordinates must lie in [-8, 8]")


def run(params: Params, ctx: RunContext) -> Table:
    rows = []
    for xi in params["xis"]:
        for probe in probe_grid(float(xi), [float(x) for x in params["xs"]]):
            rows.append({
                "xi": probe.xi, "x": probe.x, "y": probe.y,
                "plus_plus": probe.plus_plus, "mixed": probe.mixed,
                "minus_minus": probe.minus_minus, "airy": probe.airy,
                "gap": probe.mixed_gap,
            })
    return Table(list(COLUMNS), rows)


def selftest() -> list:
    xi = 1e5
    scaled, _ = correlation_probe(xi, [-1.0])
    x = (edge_point(xi, -1.0) - edge_centre(xi)) / edge_width(xi)
    return [check("one-point density near the Airy kernel", abs(scaled - airy_kernel(x, x)) < 0.05)]


EXPERIMENT = Experiment(
    "limit",
    "scaled kernel probes against the Airy kernel",
    LimitParams, DEFAULTS, COLUMNS, run, validate, selftest,
)
