"""lab.experiments.ascent

The law of the longest ascent pair L: an exhaustive census of S_N against
N! times the exact lambda_1 law, the exact law itself, the poissonized law,
and seeded Monte Carlo histograms.
"""

import math
from typing import TypedDict

from schurlab.plancherel import (
    TIERS,
    ascent_census,
    exact_lambda1_distribution,
    law_mean,
    mc_poissonized,
    mc_scaled_l,
    poissonized_lambda1_distribution,
)

from .base import Experiment, Params, RunContext, Table, check, require

MODES = ("census", "exact", "poissonized", "mc", "mc-poissonized")
MAX_SAMPLES = 10_000_000


class AscentParams(TypedDict):
    mode: str
    n: int
    xi: float | int
    samples: int
    tier: str
    cutoff: int


DEFAULTS: Params = {
    "mode": "census",
    "n": 8,
    "xi": 25.0,
    "samples": 1000,
    "tier": "dp",
    "cutoff": 60,
}
CENSUS_COLUMNS = ("h", "count", "expected", "equal")
EXACT_COLUMNS = ("h", "probability", "cdf")
POISSONIZED_COLUMNS = ("h", "probability")
MC_COLUMNS = ("value", "count", "scaled")
MODE_COLUMNS = {
    "census": CENSUS_COLUMNS,
    "exact": EXACT_COLUMNS,
    "poissonized": POISSONIZED_COLUMNS,
    "mc": MC_COLUMNS,
    "mc-poissonized": MC_COLUMNS,
}
COLUMNS = CENSUS_COLUMNS


def validate(params: Params) -> None:
    mode = params["mode"]
    require(mode in MODES, f"mode must be one of {', '.join(MODES)}", mode=mode)
    require(params["tier"] in TIERS, f"tier must be one of {', '.join(TIERS)}", tier=params["tier"])
    require(params["n"] >= 1, "n must be positive", n=params["n"])
    require(params["xi"] > 0, "xi must be positive", xi=params["xi"])
    require(1 <= params["samples"] <= MAX_SAMPLES, f"samples must lie in [1, {MAX_SAMPLES}]")
    require(0 <= params["cutoff"], "cutoff must be nonnegative")
    # scale limits raise InfeasibleScaleError inside the modules


def _census(params: Params) -> Table:
    N = params["n"]
    census = ascent_census(N, params["tier"])
    law = exact_lambda1_distribution(N)
    factorial = math.factorial(N)
    rows = []
    for h in sorted(set(census) | set(law)):
        expected = law.get(h, 0) * factorial
        rows.append({"h": h, "count": census.get(h, 0), "expected": expected,
                     "equal": census.get(h, 0) == expected})
    return Table(list(CENSUS_COLUMNS), rows)


def _exact(params: Params) -> Table:
    law = exact_lambda1_distribution(params["n"])
    rows, cdf = [], 0
    for h in sorted(law):
        cdf += law[h]
        rows.append({"h": h, "probability": law[h], "cdf": cdf})
    return Table(list(EXACT_COLUMNS), rows, {"mean": law_mean(law)})


def _poissonized(params: Params) -> Table:
    law, tail = poissonized_lambda1_distribution(float(params["xi"]), params["cutoff"])
    rows = [{"h": h, "probability": law[h]} for h in sorted(law)]
    return Table(list(POISSONIZED_COLUMNS), rows, {"tail": tail, "mean": law_mean(law)})


def _monte_carlo(params: Params, ctx: RunContext) -> Table:
    if params["mode"] == "mc":
        run = mc_scaled_l(params["n"], params["samples"], ctx.seed, ctx.threads)
    else:
        run = mc_poissonized(float(params["xi"]), params["samples"], ctx.seed, ctx.threads)
    rows = [dict(row, scaled=run.scaled(row["value"])) for row in run.rows()]
    return Table(list(MC_COLUMNS), rows, {"mean": run.mean(), "centre": run.centre()})


def run(params: Params, ctx: RunContext) -> Table:
    match params["mode"]:
        case "census":
            return _census(params)
        case "exact":
            return _exact(params)
        case "poissonized":
            return _poissonized(params)
    return _monte_carlo(params, ctx)


def selftest() -> list:
    checks = []
    for N in range(1, 7):
        table = _census(dict(DEFAULTS, n=N))
        checks.append(check(f"census S_{N} = {N}! x law", all(row["equal"] for row in table.rows)))
    first = run(dict(DEFAULTS, mode="mc", n=50, samples=200), RunContext(seed=7, threads=1))
    again = run(dict(DEFAULTS, mode="mc", n=50, samples=200), RunContext(seed=7, threads=2))
    checks.append(check("seeded histograms replay across thread counts", first.rows == again.rows))
    return checks


EXPERIMENT = Experiment(
    "ascent",
    "L distribution: census, exact law, poissonized law, Monte Carlo",
    AscentParams, DEFAULTS, COLUMNS, run, validate, selftest, MODE_COLUMNS,
)
