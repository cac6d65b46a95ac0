#!/usr/bin/env python3
"""
Calculate lint score from flake8 violations.
Score formula: 10 - (violations / 10)
Minimum required: 7.5/10
"""
import subprocess
import sys

LINT_TARGETS = [
    'config.py',
    'errors.py',
    'perm_core.py',
    'sn_ogs.py',
    'alt_ogs.py',
    'verify_oracle.py',
    'cli.py',
    'app.py',
    'tests/',
]
REQUIRED_SCORE = 7.5


def lint_score(violation_count):
    """Score capped at 10.0 and floored at 0.0."""
    return max(0.0, min(10.0, 10.0 - (violation_count / 10.0)))


def count_violations(output):
    """flake8 --count prints the total on a line of its own."""
    for line in output.strip().split('\n'):
        if line.strip().isdigit():
            return int(line.strip())
    return 0


def calculate_lint_score():
    """Run flake8 and calculate lint score."""
    try:
        result = subprocess.run(
            ['flake8', *LINT_TARGETS, '--count', '--statistics'],
            capture_output=True,
            text=True,
            check=False
        )
        violation_count = count_violations(result.stdout)
        score = lint_score(violation_count)

        print(f"Flake8 Violations: {violation_count}")
        print(f"Lint Score: {score:.2f}/10")
        print(f"Required: >= {REQUIRED_SCORE}/10")

        if score >= REQUIRED_SCORE:
            print("[PASS] Lint score PASSED")
            return 0
        print(f"[FAIL] Lint score FAILED (need >= {REQUIRED_SCORE}, got {score:.2f})")
        return 1

    except FileNotFoundError:
        print("Error: flake8 not found. Please install it with: pip install flake8")
        return 1


if __name__ == '__main__':
    sys.exit(calculate_lint_score())
