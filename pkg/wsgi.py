#!/usr/bin/env python3
"""
WSGI Entry Point for the schurlab API

Production deployment entry point for Gunicorn and other WSGI servers.

Usage with Gunicorn:
    gunicorn --bind "0.0.0.0:$PORT" wsgi:app
"""

from main import create_app

# WSGI application instance for production deployment
app = create_app()

if __name__ == "__main__":
    print("⚠️  Running WSGI module directly. For production, use gunicorn wsgi:app")
    app.run(host="0.0.0.0", port=5000, debug=False)
