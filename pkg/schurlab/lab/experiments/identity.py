"""lab.experiments.identity

sum over strict lambda of N of 2^(N - l) (g^lambda)^2 = N!, and the closed
form for g^lambda against counting standard shifted tableaux.
"""

from typing import TypedDict

from schurlab.partitions import count_shifted_tableaux, g_formula, iter_strict, verify_factorial_identity
from schurlab.partitions.tableaux import IDENTITY_MAX_N, ORACLE_MAX_SIZE

from .base import Experiment, Params, RunContext, Table, check, require


class IdentityParams(TypedDict):
    nmax: int


DEFAULTS: Params = {"nmax": 12}
COLUMNS = ("N", "lhs", "rhs", "equal", "g_matches_count")


def validate(params: Params) -> None:
    require(1 <= params["nmax"] <= IDENTITY_MAX_N,
            f"nmax must lie in [1, {IDENTITY_MAX_N}]", nmax=params["nmax"])


def run(params: Params, ctx: RunContext) -> Table:
    rows = []
    for N in range(1, params["nmax"] + 1):
        lhs, rhs = verify_factorial_identity(N)
        counted = None
        if N <= ORACLE_MAX_SIZE:
            counted = all(g_formula(lam) == count_shifted_tableaux(lam) for lam in iter_strict(N))
        rows.append({"N": N, "lhs": lhs, "rhs": rhs, "equal": lhs == rhs, "g_matches_count": counted})
    return Table(list(COLUMNS), rows)


def selftest() -> list:
    table = run({"nmax": 8}, RunContext())
    return [
        check(f"N = {row['N']}", row["equal"] and row["g_matches_count"])
        for row in table.rows
    ]


EXPERIMENT = Experiment(
    "identity",
    "N! as a sum of squared shifted tableau counts",
    IdentityParams, DEFAULTS, COLUMNS, run, validate, selftest,
)
