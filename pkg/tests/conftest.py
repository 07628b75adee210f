"""Shared test fixtures."""

from __future__ import annotations

import os
from pathlib import Path

import numpy as np
import pytest
from dotenv import load_dotenv

from hankelkit.config import QuadratureConfig, Settings
from hankelkit.measure import Measure, compact, lebesgue, lebesgue01


_ENV_FILE = Path(__file__).resolve().parents[1] / ".env"


@pytest.fixture(scope="session", autouse=True)
def _load_env() -> None:
    load_dotenv(dotenv_path=_ENV_FILE, override=False)


def pytest_collection_modifyitems(config: pytest.Config, items: list[pytest.Item]) -> None:
    load_dotenv(dotenv_path=_ENV_FILE, override=False)
    if _env_flag("HANKELKIT_TEST_SLOW"):
        return
    skip_slow = pytest.mark.skip(reason="Large-order runs are disabled; set HANKELKIT_TEST_SLOW=1.")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def cfg() -> QuadratureConfig:
    return QuadratureConfig()


@pytest.fixture()
def settings() -> Settings:
    return Settings.load(env={})


@pytest.fixture(scope="session")
def unit_lebesgue() -> Measure:
    return lebesgue01()


@pytest.fixture(scope="session")
def linear_density() -> Measure:
    """Density 1 − μ on [0, 1]."""

    return compact()


@pytest.fixture(scope="session")
def centered_lebesgue() -> Measure:
    return lebesgue(-0.5, 0.5)


@pytest.fixture(scope="session")
def half_atom() -> Measure:
    return Measure.from_parts([(-0.5, 1.0)])


@pytest.fixture(scope="session")
def test_measures() -> list[Measure]:
    return [
        lebesgue01(),
        compact(),
        lebesgue(-0.5, 0.5),
        Measure.from_parts([(-0.9, 0.25), (0.0, 1.0), (0.75, 0.5)]),
    ]


@pytest.fixture()
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


def _env_flag(name: str) -> bool:
    value = os.getenv(name, "").strip().lower()
    return value in {"1", "true", "yes", "on"}
