"""Shared group fixtures and an isolated cache directory."""

import pytest

from dw_motion.groups import (
    FiniteGroup,
    cyclic,
    quaternion,
    special_linear,
    symmetric,
)


@pytest.fixture(scope="session")
def s3() -> FiniteGroup:
    """S_3 with elements e, (23), (12), (123), (132), (13)."""
    return symmetric(3)


@pytest.fixture(scope="session")
def z2() -> FiniteGroup:
    return cyclic(2)


@pytest.fixture(scope="session")
def z3() -> FiniteGroup:
    return cyclic(3)


@pytest.fixture(scope="session")
def z6() -> FiniteGroup:
    return cyclic(6)


@pytest.fixture(scope="session")
def q8() -> FiniteGroup:
    return quaternion()


@pytest.fixture(scope="session")
def sl23() -> FiniteGroup:
    """SL(2,3), order 24."""
    return special_linear(2, 3)


@pytest.fixture
def temp_cache_dir(tmp_path, monkeypatch):
    """Redirect the group-table cache to a temporary directory."""
    cache_dir = tmp_path / "groups"
    monkeypatch.setattr("dw_motion.data.cache.GROUP_CACHE_DIR", cache_dir)
    return cache_dir
