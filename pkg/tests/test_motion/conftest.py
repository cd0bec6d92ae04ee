"""Pytest fixtures for motion tests."""

import pytest

from dw_motion.groups import FiniteGroup
from dw_motion.homs import FluxLabel


def commuting_labels(group: FiniteGroup) -> list[FluxLabel]:
    """Every commuting pair (g, h) as a flux label."""
    return [
        FluxLabel(g, h)
        for g in range(group.order)
        for h in range(group.order)
        if group.commutes(g, h)
    ]


@pytest.fixture
def trivial_label() -> FluxLabel:
    return FluxLabel(0, 0)
