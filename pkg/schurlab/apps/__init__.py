"""apps

Web applications for schurlab.

## Applications

- api: JSON endpoints that run the lab experiments.
"""

from flask import Flask

from schurlab.common import devops, errors

from . import api


def create_app_from_modules(*modules) -> Flask:
    """Factory function to create the Flask app from app modules."""
    app = Flask(__name__)
    app.testing = devops.ENV == devops.TESTING
    for module in modules:
        module.init_app(app)
    errors.init_app(app)

    # Health check route for deployments
    @app.route('/')
    def health_check():
        return {'status': 'healthy', 'service': 'schurlab'}, 200

    return app


def create_app() -> Flask:
    """Create the schurlab app with all modules"""
    return create_app_from_modules(api)


__all__ = [
    "api",
    "create_app_from_modules",
    "create_app",
]
