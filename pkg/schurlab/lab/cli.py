"""lab.cli

The command-line driver: one subcommand per experiment, each accepting its
parameters as flags, a flat config file, and the run-wide options.

Exit status: 0 success, 2 config error, 3 infeasible scale, 4 selftest
failure.
"""

import argparse
import logging
import sys
from typing import Sequence, get_origin

from schurlab.common.devops import OUTPUT_DIR_VAR, default_threads
from schurlab.common.errors import ConfigError, LabError
from schurlab.common.validation.record import get_requiredness_type

from .config import build_config, load_config_file
from .experiments import EXPERIMENTS, Experiment
from .runner import run_experiment, run_selftest, write_artifact

logger = logging.getLogger(__name__)


class _ArgumentParser(argparse.ArgumentParser):
    """Report usage errors as ConfigError instead of exiting."""

    def error(self, message):
        raise ConfigError(f"{self.prog}: {message}")


def _flag(key: str) -> str:
    return "--" + key.replace("_", "-")


def _add_experiment(subparsers, experiment: Experiment) -> None:
    epilog = experiment.column_help()
    parser = subparsers.add_parser(
        experiment.name,
        help=experiment.summary,
        description=experiment.summary,
        epilog=epilog,
    )
    for key, annotation in experiment.annotations.items():
        _, typ = get_requiredness_type(annotation)
        default = experiment.defaults.get(key)
        shown = "required" if key not in experiment.defaults else f"default {default!r}"
        if get_origin(typ) is list:
            shown += "; comma separated"
        if typ is bool:
            parser.add_argument(_flag(key), dest=key, nargs="?", const="true", default=None,
                                help=f"{key} ({shown})")
        else:
            parser.add_argument(_flag(key), dest=key, default=None, metavar="VALUE",
                                help=f"{key} ({shown})")
    group = parser.add_argument_group("run options")
    group.add_argument("--config", metavar="FILE", help="flat key = value file; flags win")
    group.add_argument("--out", metavar="PATH",
                       help=f"output file (default ${OUTPUT_DIR_VAR}/{experiment.name}.<format>)")
    group.add_argument("--format", choices=("csv", "json"), default=None)
    group.add_argument("--threads", metavar="K", default=None,
                       help="worker count (default: machine parallelism)")
    group.add_argument("--seed", metavar="S", default=None, help="64-bit seed (default 1)")
    group.add_argument("--selftest", action="store_true",
                       help="run the oracle checks instead of the experiment")
    parser.set_defaults(experiment=experiment)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="schurlab",
        description="Shifted Schur measure laboratory",
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings only")
    subparsers = parser.add_subparsers(title="experiments", metavar="SUBCOMMAND",
                                       parser_class=_ArgumentParser)
    subparsers.required = True
    for experiment in EXPERIMENTS.values():
        _add_experiment(subparsers, experiment)
    return parser


def configure_logging(verbose: bool = False, quiet: bool = False) -> None:
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def dispatch(args: argparse.Namespace) -> None:
    experiment: Experiment = args.experiment
    if args.selftest:
        checks = run_selftest(experiment)
        print(f"{experiment.name}: {len(checks)} checks passed")
        return
    file_values = load_config_file(args.config) if args.config else {}
    flag_values = {key: getattr(args, key) for key in experiment.annotations}
    flag_values.update(
        {key: getattr(args, key) for key in ("seed", "threads", "format", "out")}
    )
    try:
        threads = default_threads()
    except ValueError as err:
        raise ConfigError(str(err)) from err
    config = build_config(experiment, file_values, flag_values, default_threads=threads)
    table = run_experiment(config)
    path = write_artifact(config, table)
    print(path)


def main(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, run, and return the exit status."""
    try:
        args = build_parser().parse_args(argv)
    except ConfigError as err:
        print(f"error: {err.message}", file=sys.stderr)
        return err.exit_code
    configure_logging(args.verbose, args.quiet)
    try:
        dispatch(args)
    except LabError as err:
        print(f"error: {err.describe()}", file=sys.stderr)
        return err.exit_code
    return 0
