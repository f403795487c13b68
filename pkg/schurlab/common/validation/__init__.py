"""common.validation

Validation of parameter records, shared by the command-line driver and the
HTTP surface.
"""

from . import record

__all__ = ["record"]
