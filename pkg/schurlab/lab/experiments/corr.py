"""lab.experiments.corr

Correlation functions rho(A) of the shifted Schur measure by the pfaffian
of M(A) and by direct summation, for every A within a set of points.
"""

import itertools
from fractions import Fraction
from typing import TypedDict

from schurlab.correlation import BRUTEFORCE_MAX_CUTOFF, KernelSpec, kernel_spec, rho_bruteforce, rho_pfaffian
from schurlab.schurq import finite_vars

from .base import Experiment, Params, RunContext, Table, check, require

MAX_POINTS = 8


class CorrParams(TypedDict):
    points: list[int]
    max_size: int
    xs: list[Fraction | int]
    ys: list[Fraction | int]
    T: int
    cutoff: int
    mode: str


DEFAULTS: Params = {
    "points": [1, 2, 3, 4],
    "max_size": 3,
    "xs": [Fraction(1, 10), Fraction(1, 20)],
    "ys": [Fraction(1, 10), Fraction(1, 20)],
    "T": 40,
    "cutoff": 24,
    "mode": "approx",
}
COLUMNS = ("A", "pfaffian", "pfaffian_error", "direct", "direct_tail", "gap", "agree")


def validate(params: Params) -> None:
    points = params["points"]
    require(0 < len(points) <= MAX_POINTS, f"between 1 and {MAX_POINTS} points are supported")
    require(all(k > 0 for k in points) and len(set(points)) == len(points),
            "points must be distinct positive integers")
    require(1 <= params["max_size"] <= len(points), "max_size must lie in [1, len(points)]")
    require(params["mode"] in ("exact", "approx"), "mode must be exact or approx", mode=params["mode"])
    require(params["T"] > 2 * max(points), "T must exceed twice the largest point", T=params["T"])
    require(0 < params["cutoff"] <= BRUTEFORCE_MAX_CUTOFF,
            f"cutoff must lie in [1, {BRUTEFORCE_MAX_CUTOFF}]", cutoff=params["cutoff"])
    for side in ("xs", "ys"):
        require(all(abs(x) < 1 for x in params[side]), f"{side} must have magnitude < 1")


def _kernel(params: Params) -> KernelSpec:
    specX = finite_vars([Fraction(x) for x in params["xs"]])
    specY = finite_vars([Fraction(y) for y in params["ys"]])
    return kernel_spec(specX, specY, params["T"], params["mode"])


def run(params: Params, ctx: RunContext) -> Table:
    ks = _kernel(params)
    rows = []
    for size in range(1, params["max_size"] + 1):
        for subset in itertools.combinations(sorted(params["points"], reverse=True), size):
            if sum(subset) > params["cutoff"]:
                continue
            pf, direct = rho_pfaffian(ks, subset), rho_bruteforce(ks, subset, params["cutoff"])
            gap = abs(float(pf.value) - float(direct.value))
            rows.append({
                "A": list(subset),
                "pfaffian": pf.value,
                "pfaffian_error": pf.error,
                "direct": direct.value,
                "direct_tail": direct.error,
                "gap": gap,
                "agree": gap <= pf.error + direct.error + 1e-15,
            })
    return Table(list(COLUMNS), rows)


def selftest() -> list:
    params = dict(DEFAULTS, points=[1, 2, 3], cutoff=16, T=24)
    table = run(params, RunContext())
    return [check(f"rho{row['A']} pfaffian = direct sum", row["agree"]) for row in table.rows]


EXPERIMENT = Experiment(
    "corr",
    "rho(A): pfaffian of M(A) against direct summation",
    CorrParams, DEFAULTS, COLUMNS, run, validate, selftest,
)
