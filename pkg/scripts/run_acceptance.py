"""Run the acceptance criteria and print one line per criterion.

    python3 scripts/run_acceptance.py
"""
import sys
from pathlib import Path

import pytest

root = Path(__file__).resolve().parents[1]
sys.exit(pytest.main([str(root / "tests" / "test_acceptance.py"), "-q", "-s", "-p", "no:cacheprovider"]))
