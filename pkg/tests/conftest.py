"""Shared fixtures for the vclab test suite."""

import math
from pathlib import Path

import pytest

from src.integrals import Trig
from src.systems import BasisFamily, BasisFunction

CONFIG_DIR = Path(__file__).resolve().parents[1] / "config"


@pytest.fixture
def config_dir() -> Path:
    return CONFIG_DIR


@pytest.fixture
def sine_basis():
    """sin(jπt), j = 1..k."""
    def build(k: int) -> BasisFamily:
        return BasisFamily(elements=[
            BasisFunction(ell=0, alpha=0.0, beta=j * math.pi, kind=Trig.SIN) for j in range(1, k + 1)
        ])
    return build


@pytest.fixture
def fourier_basis() -> BasisFamily:
    """{1, sin 2πt, cos 2πt}."""
    return BasisFamily(elements=[
        BasisFunction(ell=0, alpha=0.0, beta=0.0, kind=Trig.COS),
        BasisFunction(ell=0, alpha=0.0, beta=2 * math.pi, kind=Trig.SIN),
        BasisFunction(ell=0, alpha=0.0, beta=2 * math.pi, kind=Trig.COS),
    ])
