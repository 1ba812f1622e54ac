"""Pytest configuration and shared fixtures."""

import numpy as np
import pytest
from pathlib import Path

from src.gp import Dataset, fit_posterior
from src.models.kernel import KernelSpec
from src.rng import RngState
from src.runner.settings import LabSettings


@pytest.fixture(scope="session")
def project_root():
    """Return the project root directory."""
    return Path(__file__).parent.parent


@pytest.fixture(scope="session")
def fixtures_dir():
    """Return the test fixtures directory."""
    return Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def configs_dir(project_root):
    """Return the bundled experiment configs directory."""
    return project_root / "configs"


@pytest.fixture
def rng():
    """A fresh seeded random stream."""
    return RngState(1234)


@pytest.fixture
def unit_kernel():
    """Gaussian kernel with amplitude 1 and L = 2."""
    return KernelSpec(variant="gaussian", amplitude=1.0, lengthscale=2.0)


@pytest.fixture
def small_posterior(unit_kernel):
    """Posterior after three noisy observations in 2-D."""
    dataset = Dataset(
        inputs=np.array([[0.0, 0.0], [1.0, 0.5], [-1.5, 2.0]]),
        outputs=np.array([0.7, -0.2, 1.1]),
        noise_variance=1e-2,
    )
    return fit_posterior(dataset, unit_kernel)


@pytest.fixture
def lab_settings():
    """Small, quiet settings for fast runs."""
    return LabSettings(
        candidate_pool_size=64,
        test_set_size=500,
        t_check_samples=20,
        t_check_points=64,
        show_progress=False,
    )
