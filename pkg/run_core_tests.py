#!/usr/bin/env python3
"""Test runner script for the unit suite."""

import subprocess
import sys
from pathlib import Path

COVERED = ("core", "services", "adapters", "infrastructure")


def run_tests(
    test_path: str = "tests/",
    verbose: bool = True,
    slow: bool = False,
) -> int:
    """
    Run tests using pytest.

    Args:
        test_path: Path to test files or directory
        verbose: Whether to run in verbose mode
        slow: Whether to include the large-mode-count runs

    Returns:
        Exit code from pytest
    """
    cmd = [sys.executable, "-m", "pytest"]

    if verbose:
        cmd.append("-v")
    if not slow:
        cmd.extend(["-m", "not slow"])

    cmd.extend(f"--cov={package}" for package in COVERED)
    cmd.append("--cov-report=term-missing")
    cmd.append(test_path)

    print(f"Running: {' '.join(cmd)}")
    return subprocess.call(cmd, cwd=Path(__file__).parent)


def main() -> int:
    """Main function to run tests."""
    print("\n" + "=" * 50)
    print("Running Unit Tests")
    print("=" * 50)

    exit_code = run_tests(slow="--slow" in sys.argv[1:])

    if exit_code == 0:
        print("\nAll tests passed!")
    else:
        print("\nSome tests failed!")

    return exit_code


if __name__ == "__main__":
    sys.exit(main())
