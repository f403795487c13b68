"""common.devops

Environment handling for schurlab: the deployment environment and the
environment variables that supply run defaults.
"""

import os
from pathlib import Path
from typing import Literal


# typing stub
Env = Literal["development", "testing", "staging", "production"]

# ENV enums
DEVELOPMENT = "development"
TESTING = "testing"
STAGING = "staging"
PRODUCTION = "production"

# If not defined, assume development environment
ENV = os.getenv("ENV", "development")
assert ENV in (
    DEVELOPMENT,
    TESTING,
    STAGING,
    PRODUCTION,
), f"Invalid environment: {ENV}"

OUTPUT_DIR_VAR = "SCHURLAB_OUTPUT_DIR"
THREADS_VAR = "SCHURLAB_THREADS"
SLOW_VAR = "SCHURLAB_SLOW"


def default_output_dir() -> Path:
    """Directory that receives CLI artifacts when no --out is given."""
    return Path(os.getenv(OUTPUT_DIR_VAR, "results"))


def default_threads() -> int:
    """Worker count used when no --threads is given."""
    value = os.getenv(THREADS_VAR)
    if value is None:
        return os.cpu_count() or 1
    threads = int(value)
    if threads < 1:
        raise ValueError(f"{THREADS_VAR} must be positive, got {value!r}")
    return threads


def slow_checks_enabled() -> bool:
    """Whether acceptance-scale checks should run."""
    return os.getenv(SLOW_VAR, "0") not in ("", "0", "false", "no")
