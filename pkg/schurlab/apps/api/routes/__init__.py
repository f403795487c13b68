"""apps.api.routes

This is a namespace module for the lab API routes.
"""

from . import experiments

__all__ = [
    "experiments",
]
