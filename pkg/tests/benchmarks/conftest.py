"""Fixtures for performance benchmarks.

These fixtures use larger groups than the unit tests so that hom enumeration
and coloring sums take measurable time.
"""

import gc

import pytest

from dw_motion.data.shipped import fixture_path
from dw_motion.groups import FiniteGroup, make_group
from dw_motion.presentation import Presentation, surface_presentation
from dw_motion.simplicial import Triangulation, load_triangulation


@pytest.fixture
def benchmark_setup(benchmark):
    """Configure benchmark to disable GC during measurement."""
    benchmark.extra_info["gc_disabled"] = True
    gc.collect()
    gc.disable()
    yield
    gc.enable()


@pytest.fixture(scope="module")
def sl25() -> FiniteGroup:
    """SL(2,5), order 120."""
    return make_group("SL2:5")


@pytest.fixture(scope="module")
def s4() -> FiniteGroup:
    return make_group("S:4")


@pytest.fixture(scope="module")
def torus_presentation() -> Presentation:
    return surface_presentation("torus")


@pytest.fixture(scope="module")
def t3_presentation() -> Presentation:
    return surface_presentation("t3")


@pytest.fixture(scope="module")
def torus7() -> Triangulation:
    """Seven-vertex torus (21 edges)."""
    return load_triangulation(fixture_path("torus7.json"))
