"""schurlab.lab

The experiment laboratory: subcommand registry, configuration, runner and
command-line driver.
"""

from .cli import build_parser, main
from .config import RunConfig, build_config, load_config_file, parse_config_text
from .experiments import EXPERIMENTS
from .runner import render, run_experiment, run_selftest, write_artifact

__all__ = [
    "EXPERIMENTS",
    "RunConfig",
    "build_config",
    "build_parser",
    "load_config_file",
    "main",
    "parse_config_text",
    "render",
    "run_experiment",
    "run_selftest",
    "write_artifact",
]
