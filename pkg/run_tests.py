import argparse
import os
import sys
import unittest

from tests.shared import init

if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Run the schurlab test suite")
    parser.add_argument("--slow", action="store_true", help="include acceptance-scale checks")
    parser.add_argument("-k", "--pattern", default="test_*.py", help="test file pattern")
    args = parser.parse_args()
    if args.slow:
        os.environ["SCHURLAB_SLOW"] = "1"
    # Verbose reporting
    print("Running schurlab test suite...")
    init()
    # Discover tests in the 'tests' directory
    suite = unittest.TestLoader().discover(start_dir="tests", pattern=args.pattern)
    result = unittest.TextTestRunner(verbosity=2).run(suite)
    sys.exit(0 if result.wasSuccessful() else 1)
