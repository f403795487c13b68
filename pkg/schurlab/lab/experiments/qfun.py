"""lab.experiments.qfun

Schur Q-functions at finite variable lists: the pfaffian formula against
coefficient extraction from the generating function, and the graded
Cauchy identity.
"""

from fractions import Fraction
from typing import TypedDict

from schurlab.partitions import iter_strict
from schurlab.schurq import cauchy_graded, finite_vars, schur_q, schur_q_genfun_oracle
from schurlab.schurq.oracle import ORACLE_MAX_VARS

from .base import Experiment, Params, RunContext, Table, check, require

MAX_SIZE = 10


class QfunParams(TypedDict):
    size: int
    xs: list[Fraction | int]


DEFAULTS: Params = {"size": 6, "xs": [Fraction(1, 2), Fraction(1, 3)]}
COLUMNS = ("lambda", "pfaffian", "oracle", "equal")


def validate(params: Params) -> None:
    require(1 <= params["size"] <= MAX_SIZE, f"size must lie in [1, {MAX_SIZE}]", size=params["size"])
    xs = params["xs"]
    require(1 <= len(xs) <= ORACLE_MAX_VARS, f"between 1 and {ORACLE_MAX_VARS} variables are supported")
    require(all(abs(x) < 1 for x in xs), "variables must have magnitude < 1")


def run(params: Params, ctx: RunContext) -> Table:
    xs = [Fraction(x) for x in params["xs"]]
    spec = finite_vars(xs)
    rows = []
    for N in range(1, params["size"] + 1):
        for lam in iter_strict(N):
            if lam.length > len(xs):
                continue
            value, oracle = schur_q(lam, spec), schur_q_genfun_oracle(lam, xs)
            rows.append({"lambda": str(lam), "pfaffian": value, "oracle": oracle, "equal": value == oracle})
    graded = [cauchy_graded(xs, xs, d) for d in range(1, params["size"] + 1)]
    return Table(list(COLUMNS), rows, {"cauchy_graded_equal": all(a == b for a, b in graded)})


def selftest() -> list:
    table = run({"size": 5, "xs": [Fraction(1, 2), Fraction(1, 3), Fraction(1, 5)]}, RunContext())
    return [
        check("pfaffian = generating function", all(row["equal"] for row in table.rows)),
        check("graded Cauchy identity", table.summary["cauchy_graded_equal"]),
    ]


EXPERIMENT = Experiment(
    "qfun",
    "Q_lambda tables: pfaffian against generating-function extraction",
    QfunParams, DEFAULTS, COLUMNS, run, validate, selftest,
)
