"""lab.experiments.hlmoments

Mean and variance of |lambda| under the Hall-Littlewood measure: closed
forms against direct summation.
"""

from fractions import Fraction
from typing import TypedDict

from schurlab.halllittlewood import HLConfig, size_moments_table
from schurlab.halllittlewood.moments import BRUTE_MAX_CUTOFF, BRUTE_MAX_VARIABLES

from .base import Experiment, Params, RunContext, Table, check, require


class HLMomentsParams(TypedDict):
    t: Fraction | int
    xs: list[Fraction | int]
    ys: list[Fraction | int]
    cutoff: int


DEFAULTS: Params = {
    "xs": [Fraction(1, 5), Fraction(1, 7)],
    "ys": [Fraction(1, 5), Fraction(1, 7)],
    "cutoff": 20,
}
COLUMNS = ("t", "xs", "ys", "cutoff", "mean", "mean_brute", "variance", "variance_brute", "tail", "agree")


def validate(params: Params) -> None:
    require(-1 <= params["t"] <= 1, "t must lie in [-1, 1]", t=str(params["t"]))
    for side in ("xs", "ys"):
        require(len(params[side]) <= BRUTE_MAX_VARIABLES,
                f"{side} is limited to {BRUTE_MAX_VARIABLES} variables")
    require(0 <= params["cutoff"] <= BRUTE_MAX_CUTOFF, f"cutoff must lie in [0, {BRUTE_MAX_CUTOFF}]")


def run(params: Params, ctx: RunContext) -> Table:
    cfg = HLConfig(
        Fraction(params["t"]),
        tuple(Fraction(x) for x in params["xs"]),
        tuple(Fraction(y) for y in params["ys"]),
        params["cutoff"],
    )
    columns, rows = size_moments_table(cfg)
    return Table(columns, rows)


def selftest() -> list:
    checks = []
    for t in (Fraction(0), Fraction(-1), Fraction(1, 2)):
        table = run(dict(DEFAULTS, t=t, cutoff=12), RunContext())
        checks.append(check(f"moments at t = {t}", table.rows[0]["agree"]))
    return checks


EXPERIMENT = Experiment(
    "hl-moments",
    "mean and variance of |lambda|: closed forms against direct summation",
    HLMomentsParams, DEFAULTS, COLUMNS, run, validate, selftest,
)
