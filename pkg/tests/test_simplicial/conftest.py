"""Pytest fixtures for shipped triangulations."""

import pytest

from dw_motion.data.shipped import fixture_path
from dw_motion.simplicial import (
    Cylinder,
    Triangulation,
    load_cylinder,
    load_triangulation,
)


@pytest.fixture(scope="session")
def circle3() -> Triangulation:
    """Three-edge circle."""
    return load_triangulation(fixture_path("circle3.json"))


@pytest.fixture(scope="session")
def triangle() -> Triangulation:
    """A single 2-simplex with its three boundary edges."""
    return load_triangulation(fixture_path("triangle.json"))


@pytest.fixture(scope="session")
def triangle_cone() -> Triangulation:
    """The triangle subdivided by a cone point."""
    return load_triangulation(fixture_path("triangle_cone.json"))


@pytest.fixture(scope="session")
def torus7() -> Triangulation:
    """Seven-vertex torus."""
    return load_triangulation(fixture_path("torus7.json"))


@pytest.fixture(scope="session")
def annulus6() -> Cylinder:
    """Circle × interval with both ends on the boundary."""
    return load_cylinder(fixture_path("annulus6.json"))
