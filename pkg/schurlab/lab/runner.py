"""lab.runner

Runs a configured experiment and writes its table, or runs its selftest.
"""

import logging
import time
from pathlib import Path

from schurlab.common.devops import default_output_dir
from schurlab.common.errors import SelftestFailure
from schurlab.common.schema import JSON
from schurlab.common.utils.tables import rows_to_csv, rows_to_json

from .config import RunConfig
from .experiments import Check, Experiment, Table

logger = logging.getLogger(__name__)


def render(config: RunConfig, table: Table) -> str:
    """The artifact text; the same config and seed give the same bytes."""
    embedded = config.as_record()
    if table.summary:
        embedded["summary"] = table.summary
    if config.output_format == JSON:
        return rows_to_json(table.columns, table.rows, embedded)
    return rows_to_csv(table.columns, table.rows)


def artifact_path(config: RunConfig) -> Path:
    if config.out is not None:
        return config.out
    return default_output_dir() / f"{config.experiment.name}.{config.output_format}"


def sidecar_path(path: Path) -> Path:
    """Where a CSV run keeps its config and summary for replay."""
    return path.with_name(path.name + ".config.json")


def run_experiment(config: RunConfig) -> Table:
    experiment = config.experiment
    logger.info("running %s (seed %d, %d threads)", experiment.name, config.context.seed,
                config.context.threads)
    started = time.perf_counter()
    table = experiment.run(config.params, config.context)
    logger.info("%s finished: %d rows in %.2fs", experiment.name, len(table.rows),
                time.perf_counter() - started)
    return table


def write_artifact(config: RunConfig, table: Table) -> Path:
    """Write the table to --out or the default output directory.

    CSV runs also get a JSON sidecar with the config, seed and summary.
    """
    path = artifact_path(config)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as f:
        f.write(render(config, table))
    if config.output_format != JSON:
        embedded = config.as_record()
        if table.summary:
            embedded["summary"] = table.summary
        with sidecar_path(path).open("w", encoding="utf-8", newline="") as f:
            f.write(rows_to_json([], [], embedded))
    logger.info("wrote %s", path)
    return path


def run_selftest(experiment: Experiment) -> list[Check]:
    """Run the experiment's oracle checks.

    Raises:
        SelftestFailure: If any check fails.
    """
    logger.info("selftest %s", experiment.name)
    checks = experiment.selftest()
    for item in checks:
        status = "pass" if item.passed else "FAIL"
        logger.info("  [%s] %s %s", status, item.name, item.detail)
    failed = [item.name for item in checks if not item.passed]
    if failed:
        raise SelftestFailure(
            f"{experiment.name}: {len(failed)} of {len(checks)} checks failed",
            subcommand=experiment.name,
            failed=", ".join(failed),
        )
    return checks
