from __future__ import annotations

import numpy as np
import pytest

from clifford_workbench.algebra.multivector import AlgebraSignature
from clifford_workbench.config.suite_config import SuiteConfig


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


@pytest.fixture
def sig2() -> AlgebraSignature:
    return AlgebraSignature(2)


@pytest.fixture
def quick_config() -> SuiteConfig:
    """Small enough for every suite to finish in seconds."""
    return SuiteConfig(
        n=1,
        mass="0.5",
        refinements=[2, 3],
        bergman_refinement=4,
        calibration_refinement=3,
        samples=200,
        generator_fields=1,
    )

