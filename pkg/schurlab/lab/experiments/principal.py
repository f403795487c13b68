"""lab.experiments.principal

The principal-specialization Hall-Littlewood measure: the law of lambda_1
by the triple product and by direct summation, E(lambda_1) and its ratio
to M(t, X).
"""

from fractions import Fraction
from typing import TypedDict

from schurlab.halllittlewood import (
    m_ratio,
    principal_lambda1_table,
    principal_mass,
    principal_mean_lambda1,
)
from schurlab.halllittlewood.principal import DIRECT_MAX_SIZE

from .base import Experiment, Params, RunContext, Table, check, require

MAX_H = 50


class PrincipalParams(TypedDict):
    t: Fraction | int | float
    h_max: int
    direct_size: int


DEFAULTS: Params = {"t": Fraction(1, 4), "h_max": 5, "direct_size": 30}
COLUMNS = ("h", "cdf", "pmf", "product_error", "direct", "gap")


def validate(params: Params) -> None:
    require(0 < params["t"] < 1, "t must lie in (0, 1)", t=str(params["t"]))
    require(1 <= params["h_max"] <= MAX_H, f"h_max must lie in [1, {MAX_H}]")
    require(0 <= params["direct_size"] <= DIRECT_MAX_SIZE,
            f"direct_size must lie in [0, {DIRECT_MAX_SIZE}]")


def run(params: Params, ctx: RunContext) -> Table:
    t = params["t"]
    columns, rows = principal_lambda1_table(t, params["h_max"], params["direct_size"])
    mean = principal_mean_lambda1(t)
    summary = {"mean_lambda1": mean.value, "mean_error": mean.error, "m_ratio": m_ratio(t)}
    return Table(columns, rows, summary)


def selftest() -> list:
    checks = []
    for t in (Fraction(1, 5), Fraction(1, 4)):
        table = run(dict(DEFAULTS, t=t), RunContext())
        checks.append(check(f"product = direct sum at t = {t}", all(row["gap"] < 1e-10 for row in table.rows)))
    checks.append(check("total mass", abs(principal_mass(Fraction(1, 4), 20) - 1.0) < 1e-10))
    for t in (0.05, 0.02, 0.01):
        mean = principal_mean_lambda1(t).value
        checks.append(check(f"E(lambda_1) = t^2 + O(t^3) at t = {t}", abs(mean - t * t) / t ** 3 <= 10))
    return checks


EXPERIMENT = Experiment(
    "principal",
    "law of lambda_1 under the principal specialization",
    PrincipalParams, DEFAULTS, COLUMNS, run, validate, selftest,
)
