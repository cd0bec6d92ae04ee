"""Pytest fixtures for hom enumeration tests."""

import pytest

from dw_motion.presentation import Presentation, parse_presentation, torus


@pytest.fixture
def torus_presentation() -> Presentation:
    return torus()


@pytest.fixture
def trefoil_presentation() -> Presentation:
    """Trefoil knot group <x, y | x^2 y^-3>."""
    return parse_presentation("gens: x y\nrel: x^2 y^-3\n")


@pytest.fixture
def free_presentation() -> Presentation:
    """Free group on two generators."""
    return parse_presentation("gens: a b\n")
