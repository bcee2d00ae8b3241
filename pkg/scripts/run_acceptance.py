"""Run the acceptance criteria and print one PASS/FAIL line each."""

import pathlib
import sys

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[1]

if __name__ == "__main__":
    sys.exit(pytest.main(["-q", "-s", str(ROOT / "tests" / "test_acceptance.py"), *sys.argv[1:]]))
