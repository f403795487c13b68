"""apps.api.routes.experiments

API routes for the experiments resource.

Requests run single-threaded so that a response replays exactly.
"""

import logging
from typing import TypedDict

from flask import Blueprint, Flask, abort

import schurlab.common.validation.flask as flask_validation
from schurlab.common.errors import raise_lab_error
from schurlab.common.utils.tables import json_value
from schurlab.lab import EXPERIMENTS, build_config, run_experiment

logger = logging.getLogger(__name__)

bp = Blueprint('experiments', __name__, url_prefix='/experiments')


class ExperimentResult(TypedDict):
    config: dict
    columns: list
    rows: list


class RunOptions(TypedDict, total=False):
    seed: int


def init_app(app: Flask | Blueprint) -> None:
    """Initialise experiment routes with the given Flask app/blueprint."""
    app.register_blueprint(bp)


@bp.get('/')
def list_experiments() -> flask_validation.JsonResponse:
    """List the experiments with their parameters and columns."""
    listing = [
        {
            "name": experiment.name,
            "summary": experiment.summary,
            "parameters": sorted(experiment.annotations),
            "defaults": json_value(experiment.defaults),
            "columns": list(experiment.columns),
            "columns_by_mode": {
                mode: list(columns) for mode, columns in experiment.mode_columns.items()
            },
        }
        for experiment in EXPERIMENTS.values()
    ]
    return {"experiments": listing}, 200


@bp.post('/<string:name>')
def run(name: str) -> flask_validation.JsonResponse:
    """Run one experiment with the JSON body as its parameters."""
    experiment = EXPERIMENTS.get(name)
    if experiment is None:
        abort(404, description=f"No experiment named '{name}'")
    schema = {**experiment.annotations, **RunOptions.__annotations__}
    payload = flask_validation.validate_request_and_extract_json(
        schema,
        on_error=raise_lab_error,
        total=False,
        coerce=True,
    )
    config = build_config(experiment, {}, {**payload, "threads": 1})
    table = run_experiment(config)
    embedded = config.as_record()
    if table.summary:
        embedded["summary"] = table.summary
    resource = {
        "config": json_value(embedded),
        "columns": list(table.columns),
        "rows": [
            {column: json_value(row.get(column)) for column in table.columns}
            for row in table.rows
        ],
    }
    flask_validation.validate_json_response(
        ExperimentResult.__annotations__,
        resource,
        on_error=raise_lab_error,
    )
    return resource, 200
