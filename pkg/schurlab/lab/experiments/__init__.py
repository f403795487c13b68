"""lab.experiments

One module per subcommand of the lab. Each exposes an EXPERIMENT record.
"""

from . import ascent, corr, hlmoments, identity, limit, principal, qfun, tw
from .base import Check, Experiment, Params, RunContext, Table

EXPERIMENTS: dict[str, Experiment] = {
    module.EXPERIMENT.name: module.EXPERIMENT
    for module in (qfun, corr, identity, ascent, tw, limit, hlmoments, principal)
}

__all__ = [
    "EXPERIMENTS",
    "Check",
    "Experiment",
    "Params",
    "RunContext",
    "Table",
]
