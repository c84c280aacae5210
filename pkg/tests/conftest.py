"""Shared fixtures for the qminpoly test suite."""

import sys
from pathlib import Path

import numpy as np
import pytest

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.algebra.tensor import flip_form, symplectic_form  # noqa: E402


@pytest.fixture
def rng():
    """Seeded generator so every random construction is reproducible."""
    return np.random.default_rng(20240611)


@pytest.fixture
def j4():
    return symplectic_form()


@pytest.fixture
def r4():
    return flip_form()


@pytest.fixture
def quiet_settings():
    """Settings with colors off and default tolerances."""
    return {
        "analysis": {
            "membership_tol": 1e-9,
            "branch_tol": 1e-9,
            "oracle_tol": 1e-11,
            "agreement_tol": 1e-7,
        },
        "report": {"format": "text", "colored_output": False, "float_digits": 17},
        "logging": {"level": "WARNING", "file_enabled": False},
    }
