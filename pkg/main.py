#!/usr/bin/env python3
"""
schurlab command-line entry point

Runs one experiment per invocation and writes its table as CSV or JSON.
For the JSON API, use wsgi.py with Gunicorn.

Usage:
    python main.py identity --nmax 12
    python main.py ascent --mode census --n 8 --format json
    python main.py tw --smin -8 --smax 4 --step 0.5 --m 80
    python main.py principal --selftest
    gunicorn wsgi:app               # API deployment
"""

import sys

from schurlab.lab import cli


def create_app():
    """Create the schurlab API app"""
    print("🚀 Creating schurlab API", file=sys.stderr)
    from schurlab.apps import create_app
    return create_app()


def main(argv=None) -> int:
    """Command-line entry point; returns the exit status."""
    args = sys.argv[1:] if argv is None else argv
    quiet = "-q" in args or "--quiet" in args
    if not quiet:
        print("🧪 schurlab", file=sys.stderr)
    return cli.main(args)


if __name__ == "__main__":
    sys.exit(main())
