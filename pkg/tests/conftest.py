"""
Pytest configuration and shared fixtures for projcodes tests.
"""

import sys
import pytest
from pathlib import Path

import numpy as np

# Add the repository root to the path
sys.path.insert(0, str(Path(__file__).parent.parent))

from projcodes.config import reset_settings
from projcodes.gf import field_make
from projcodes.runlog import reset_run_logger


# ============================================================================
# Environment Fixtures
# ============================================================================

@pytest.fixture(autouse=True)
def isolated_run_log(tmp_path, monkeypatch):
    """Send the run log to a temporary directory and start from fresh settings."""
    log_dir = tmp_path / "logs"
    monkeypatch.setenv("PROJCODES_LOG_DIR", str(log_dir))
    monkeypatch.delenv("PROJCODES_CONFIG", raising=False)
    monkeypatch.delenv("PROJCODES_LOG_LEVEL", raising=False)
    monkeypatch.delenv("PROJCODES_SEED", raising=False)
    reset_settings()
    reset_run_logger()
    yield log_dir
    reset_run_logger()
    reset_settings()


@pytest.fixture
def run_log_file(isolated_run_log):
    """Path of the run log written during the test."""
    return isolated_run_log / "projcodes_runs.log"


# ============================================================================
# Field Fixtures
# ============================================================================

@pytest.fixture
def gf2():
    return field_make(2)


@pytest.fixture
def gf3():
    return field_make(3)


@pytest.fixture
def gf4():
    return field_make(2, 2)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


# ============================================================================
# Code Fixtures
# ============================================================================

@pytest.fixture
def small_injection_code():
    """(6, M, 2) injection code over GF(2), small enough to verify pair by pair."""
    from projcodes.codebook import build_code
    return build_code(6, 2, 2, "injection")


@pytest.fixture
def small_subspace_code():
    """(6, M, 4) subspace-metric code over GF(2)."""
    from projcodes.codebook import build_code
    return build_code(6, 2, 4, "subspace")
